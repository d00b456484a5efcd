#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ptopo/combinatorics.hpp"
#include "ptopo/complexes.hpp"

namespace ptopo {

// A pointed set partition of [n]: disjoint nonempty blocks plus a pointed
// block Z (possibly empty), together covering [n].
struct PointedSetPartition {
  std::vector<Mask> blocks;  // sorted by minimal element
  Mask zero = 0;
  int n = 0;

  void canonicalize();
  bool valid() const;
  // sizes of the non-pointed blocks (weakly decreasing) and |Z|.
  std::pair<std::vector<int>, int> type() const;
  // x <= y iff Z_x is contained in Z_y and every block of x lies inside a
  // block of y or inside Z_y.
  bool leq(const PointedSetPartition& other) const;
  std::string to_string() const;  // e.g. "1358|4|_267"

  auto operator<=>(const PointedSetPartition&) const = default;
};

std::vector<PointedSetPartition> all_pointed_set_partitions(int n);

struct FinitePoset {
  std::vector<std::string> labels;
  // strict[y] has bit x set iff x < y.
  std::vector<boost::dynamic_bitset<>> strict;

  int size() const { return static_cast<int>(labels.size()); }
  bool leq(int x, int y) const { return x == y || strict[y][static_cast<size_t>(x)]; }
  std::vector<std::pair<int, int>> cover_relations() const;
  std::optional<int> bottom() const;
  std::optional<int> top() const;

  FinitePoset with_bottom(const std::string& label = "0") const;
  FinitePoset without(int idx) const;
  FinitePoset induced(const std::vector<int>& keep) const;
};

// Mobius function mu(0,1) of a bounded poset.
long long mobius(const FinitePoset& p);
// mu(0, x) for every x, given a unique bottom.
std::vector<long long> mobius_from_bottom(const FinitePoset& p);

struct LatticeCheck {
  bool is_lattice = true;
  // witness pair lacking a join or meet, with the failing operation
  std::optional<std::pair<int, int>> witness;
  std::string which;  // "join" or "meet"
};
LatticeCheck check_lattice(const FinitePoset& p);
// Does a specific pair have a least upper bound?
bool has_join(const FinitePoset& p, int x, int y);

// Order complex: faces are the chains of the poset.
ChainFaces order_complex(const FinitePoset& p);

struct PointedPoset {
  FinitePoset poset;
  std::vector<PointedSetPartition> elements;

  int index_of(const PointedSetPartition& x) const;
};

// The full lattice of pointed set partitions of [n] (size Bell(n+1)).
PointedPoset build_pointed_partition_lattice(int n);
// Subposet of elements whose type matches type(d) for some d >= c.
PointedPoset build_subposet_pi_c(const Composition& c);
// Filter generated by the type-{lambda, m} elements.
PointedPoset build_filter(const KnapsackPartition& kp);

// Intersection lattice of the arrangement {x_i = x_j} union {x_i = 0},
// returned as canonicalized pointed set partitions (exact closure
// computation); used to cross-check the pointed partition lattice.
PointedPoset build_arrangement_intersection_lattice(int n);

}  // namespace ptopo
