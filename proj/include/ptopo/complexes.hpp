#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ptopo/combinatorics.hpp"
#include "ptopo/smith.hpp"

namespace ptopo {

using Mask = std::uint32_t;

int mask_min(Mask m);
int mask_max(Mask m);
std::vector<int> mask_elements(Mask m);

// An ordered set partition of [n]: pairwise disjoint blocks covering [n],
// all nonempty except that the final block may be empty.
struct OrderedSetPartition {
  std::vector<Mask> blocks;

  int num_blocks() const { return static_cast<int>(blocks.size()); }
  Composition type() const;
  bool valid(int n) const;
  OrderedSetPartition merge(int i) const;  // merge blocks i and i+1 (1-based i)
  std::string to_string() const;

  auto operator<=>(const OrderedSetPartition&) const = default;
};
using Osp = OrderedSetPartition;

struct OspHash {
  size_t operator()(const Osp& f) const {
    size_t h = f.blocks.size();
    for (Mask b : f.blocks) h = h * 1000003u + b;
    return h;
  }
};

Osp parse_osp(const std::string& s, int n);

// sigma(alpha, c): cut the word of alpha into consecutive segments with the
// sizes of c (last segment may be empty when c ends in 0).
Osp sigma(const Perm& alpha, const Composition& c);
// Minimal preimage: sort each block increasingly and concatenate.
Perm sigma_inverse(const Osp& f);

// The chain of proper prefixes identifying the simplex vertices of a face.
std::vector<Mask> prefix_chain(const Osp& f);

struct HomologyProfile {
  int top_dim = -2;                 // largest dimension with a face; -2 if empty
  std::vector<long long> betti;     // betti[i] = reduced Betti in dim i-1
  std::vector<std::vector<Int>> torsion;  // torsion[i] for dim i-1

  long long betti_dim(int d) const;
  bool torsion_free() const;
  // Nonzero only in dimension d, where the rank is `rank` (torsion-free).
  bool concentrated_in(int d, long long rank) const;
  std::string to_string() const;
};

// A complex of ordered set partitions, closed under merging adjacent blocks.
struct OrderedComplex {
  int n = 0;
  // by_blocks[r] = faces with exactly r blocks (dimension r - 2); index 0 unused.
  std::vector<std::vector<Osp>> by_blocks;
  std::unordered_map<Osp, int, OspHash> index_of;  // face -> index in its level

  bool contains(const Osp& f) const { return index_of.count(f) != 0; }
  int max_blocks() const;
  long long num_faces() const;
  const std::vector<Osp>& facets() const;  // faces at the top level (pure complexes)

  static OrderedComplex from_face_set(int n, const std::vector<Osp>& faces);
  static OrderedComplex closure_of_facets(int n, const std::vector<Osp>& facets);
  void finalize();  // build index, verify closure under merges
};

// Delta_c: faces are the ordered set partitions whose type is >= c.
OrderedComplex build_delta_c(const Composition& c);
// Lambda_{lambda, m}: ordered set partitions whose pointed image lies in the
// filter generated by the type-{lambda, m} pointed partitions.
OrderedComplex build_lambda(const KnapsackPartition& kp);

// Boundary matrix from the r-block level to the (r-1)-block level.
SparseMat boundary_matrix(const OrderedComplex& K, int r);
HomologyProfile reduced_homology(const OrderedComplex& K);

// Is K a cone with the given vertex (2-block face) as apex?
bool is_cone(const OrderedComplex& K, const Osp& apex);

// Integer chains over faces of one dimension.
struct ChainElement {
  int num_blocks = 0;  // every face has this many blocks (dimension num_blocks-2)
  std::map<Osp, long long> coeff;

  void add(const Osp& f, long long v);
  bool is_zero() const { return coeff.empty(); }
};
ChainElement boundary(const ChainElement& x);

struct ShellingResult {
  bool is_shelling = false;
  int fail_index = -1;           // first facet violating the condition (0-based)
  std::vector<int> spanning;     // indices of spanning facets in the order
  bool used_fallback = false;    // greedy fallback produced the order
  std::vector<Osp> order;        // the facet order that was checked/found
};
// Check a given facet order.
ShellingResult verify_shelling(const OrderedComplex& K, const std::vector<Osp>& order);
// Candidate order: lexicographic on the word of sigma_inverse; greedy
// backtracking fallback if that fails.
ShellingResult shell(const OrderedComplex& K);

// ---------------------------------------------------------------------------
// Generic complexes whose faces are chains of a poset (order complexes,
// barycentric subdivisions).  Faces are stored in their unique poset order.
struct ChainFaces {
  long long num_vertices = 0;
  // by_dim[d] = faces of dimension d (chains with d+1 elements), d >= 0.
  std::vector<std::vector<std::vector<int>>> by_dim;

  int top_dim() const { return static_cast<int>(by_dim.size()) - 1; }
};
HomologyProfile reduced_homology(const ChainFaces& K);

ChainFaces barycentric_subdivision(const OrderedComplex& K);

}  // namespace ptopo
