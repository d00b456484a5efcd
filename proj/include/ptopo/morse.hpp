#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ptopo/combinatorics.hpp"
#include "ptopo/complexes.hpp"

namespace ptopo {

enum class MatchStatus { MatchedUp, MatchedDown, Critical };

struct MatchDecision {
  MatchStatus status = MatchStatus::Critical;
  Osp partner;        // u(tau) or d(tau); unset when critical
  int edge_type = 0;  // index i of the rule that fired (1..r)
};

// Apply the matching rules to one face of Lambda_{lambda, m}: scan
// i = 1, 2, ...; at the first index where a condition holds, B_i (split)
// takes priority over A_i (merge); critical iff no condition holds.
MatchDecision match_face(const Osp& tau, const KnapsackPartition& kp);

struct MorseMatching {
  const KnapsackPartition* kp = nullptr;
  OrderedComplex complex;
  std::unordered_map<Osp, MatchDecision, OspHash> decisions;

  std::vector<Osp> critical_cells() const;
};

// Build the matching on all of Lambda and verify it is an involution.
MorseMatching build_matching(const KnapsackPartition& kp);

struct AcyclicityReport {
  bool acyclic_dfs = false;          // exact cycle search on the modified Hasse diagram
  bool acyclic_certificate = false;  // topological order exists (Kahn's algorithm)
  std::optional<std::string> cycle_witness;
};
AcyclicityReport verify_acyclic(const MorseMatching& m);

// The predicted critical cells sigma(alpha, epsilon(d)) over d in V,
// Des(alpha) = d.
std::vector<Osp> predicted_critical_cells(const KnapsackPartition& kp);

}  // namespace ptopo
