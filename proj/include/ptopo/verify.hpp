#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ptopo/combinatorics.hpp"

namespace ptopo {

struct Claim {
  std::string id;
  std::string statement;  // the identity being checked
  bool pass = false;
  std::string witness;    // first counterexample / diagnostic, empty if pass
  double wall_time = 0.0;
};

struct VerificationReport {
  std::vector<Claim> claims;
  bool all_pass() const;
};

// Enumerate pointed knapsack partitions {lambda, m} with |lambda| + m = n,
// lambda nonempty.
std::vector<KnapsackPartition> knapsack_pairs(int n);

// suite in {mobius, homology, morse, cycles, specht, all}.
VerificationReport run_suite(const std::string& suite, int max_n, int jobs = 1,
                             unsigned rng_seed = 0);

}  // namespace ptopo
