#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptopo {

// One-line notation, values 1..n.
using Perm = std::vector<int>;

inline bool is_permutation_word(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  for (int v : a) {
    if (v < 1 || v > static_cast<int>(a.size()) || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

// (a * g)(i) = a(g(i)): g permutes positions of the word of a.
Perm compose(const Perm& a, const Perm& g);
int perm_sign(const Perm& a);
Perm identity_perm(int n);

// Right weak order via containment of inversion sets (pairs of values).
bool weak_bruhat_leq(const Perm& a, const Perm& b);

// Pointed composition: positive entries except that the final entry may be 0.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {}

  int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int k() const { return static_cast<int>(parts.size()); }
  bool last_positive() const { return !parts.empty() && parts.back() > 0; }
  bool valid() const;

  // Proper prefix sums as a set; contains n exactly when the last part is 0.
  std::set<int> boundary_set() const;

  auto operator<=>(const Composition&) const = default;
  std::string to_string() const;
};

Composition descent_composition(const Perm& a);

// c <= d in the composition order on pointed compositions of the same n
// (cover relation: add two adjacent entries).  Isomorphic to the Boolean
// algebra on [n] via boundary sets, reverse inclusion.
bool composition_leq(const Composition& c, const Composition& d);

// Exchange commas and plus signs; defined for compositions with positive
// last part.  Involution; the result has n - k + 1 parts.
Composition complement_composition(const Composition& c);

struct IntervalDecomposition {
  // Inclusive 1-based position intervals.
  std::vector<std::pair<int, int>> rows;  // R_i from c
  std::vector<std::pair<int, int>> cols;  // K_j from the complement of c
};
IntervalDecomposition interval_decomposition(const Composition& c);

// Number of permutations of [n] whose descent composition equals c.
// Zero when the last part is 0 and k >= 2; one for c = (n) and c = (0).
long long beta(const Composition& c);

// All permutations of [n] grouped by descent composition (cached per n).
const std::map<Composition, std::vector<Perm>>& descent_classes(int n);
std::vector<Perm> perms_with_descent_composition(const Composition& c);

// All pointed compositions of n (positive parts, last may be 0).
std::vector<Composition> all_pointed_compositions(int n);
// Only those with positive last part.
std::vector<Composition> all_positive_compositions(int n);

// ---------------------------------------------------------------------------
// Knapsack partitions.

// True when all sub-multiset sums of lambda are distinct, i.e. the
// (e_1+1)...(e_q+1) sums f_1 v_1 + ... + f_q v_q are pairwise different.
bool is_knapsack(const std::vector<int>& lambda);

// A pointed knapsack partition {lambda, m} with the derived tables:
//  - reps: every achievable sub-multiset sum s -> its unique decreasing part
//    list (domain D of kappa = sums over index subsets);
//  - kappa(s): smallest part in the unique representation of s.
struct KnapsackPartition {
  std::vector<int> lambda;  // weakly decreasing, positive
  int m = 0;
  int n = 0;  // sum(lambda) + m

  std::map<int, std::vector<int>> reps;  // s in D -> decreasing parts

  KnapsackPartition(std::vector<int> lambda_in, int m_in,
                    bool allow_non_knapsack = false);

  bool in_domain(int s) const { return reps.count(s) != 0; }
  int kappa(int s) const;

  // Does a multiset of block sizes (non-pointed blocks) together with a
  // pointed block of size zsize admit a full decomposition into the parts of
  // lambda with m left for the pointed block?  Exact via unique reps.
  bool type_in_filter(const std::vector<int>& block_sizes, int zsize) const;

  // V(lambda, m): compositions (c_1..c_{r-1}, m) in the filter generated by
  // the type-{lambda, m} compositions with every c_i a sum of parts of
  // lambda with pairwise distinct values.
  std::vector<Composition> v_set() const;

  // epsilon(d): replace every d_i by the decreasing list of parts it
  // decomposes into; requires d in V.
  Composition epsilon(const Composition& d) const;

  // W(d): members of V below d of type {lambda, m}, with the sign of the
  // blockwise permutation taking epsilon(d) to c.
  std::vector<std::pair<Composition, int>> w_set(const Composition& d) const;

  bool is_valid_v_member(const Composition& d) const;
};

// ---------------------------------------------------------------------------
// Global size caps (override with PARTITION_TOPOLOGY_CAP).
struct Caps {
  int pointed_lattice = 7;  // Pi^*_n materialization
  int delta_complex = 8;    // Delta_c
  int lambda_complex = 7;   // Lambda_{lambda,m}
  int beta_enumeration = 10;
};
const Caps& caps();
void check_cap(int n, int cap, const char* what);

}  // namespace ptopo
