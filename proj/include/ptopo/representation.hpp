#pragma once

#include <string>
#include <vector>

#include "ptopo/combinatorics.hpp"
#include "ptopo/complexes.hpp"

namespace ptopo {

// Border strip of a composition c with positive last part: k rows read from
// the bottom, row i holding c_i boxes; boxes labelled 1..n to the northeast.
// Box j sits in the row R_i and the column K_t containing position j.
struct BorderStrip {
  Composition c;
  std::vector<std::pair<int, int>> box;  // box[j-1] = (row, col), 1-based

  int n() const { return c.n(); }
};
BorderStrip border_strip(const Composition& c);

// A filling of a border strip: entries[j-1] = value in box j, so the word of
// the tableau is exactly the permutation read to the northeast.
struct Tableau {
  BorderStrip shape;
  Perm entries;
};
Tableau tableau_of_permutation(const Perm& alpha, const Composition& c);
Perm permutation_of_tableau(const Tableau& t);

// Standard: rows increase eastward, columns increase southward (equivalently
// the column entries decrease toward the northeast reading direction).
bool is_standard(const Tableau& t);
long long syt_count(const BorderStrip& shape);  // brute force over all fillings

// Tabloid: the rows of a tableau as sets, bottom row first.
struct Tabloid {
  Composition shape_c;
  std::vector<Mask> rows;

  auto operator<=>(const Tabloid&) const = default;
};
Tabloid tabloid_of_tableau(const Tableau& t);
// Bijection with faces: rows become blocks in the same order.
Osp facet_of_tabloid(const Tabloid& s);
Tabloid tabloid_of_facet(const Osp& f, const Composition& c);

// Column stabilizer of the border strip of c, as position permutations
// (products of symmetric groups on the intervals K_j).
std::vector<std::pair<Perm, int>> column_stabilizer(const Composition& c);

// g_alpha = sum over the column stabilizer of sign(gamma) sigma(alpha o gamma, c).
ChainElement cycle_g_alpha(const Perm& alpha, const Composition& c);
// g_{alpha,d} = sum over gamma and over c in W(d) of the signed refinements.
ChainElement cycle_g_alpha_d(const Perm& alpha, const Composition& d,
                             const KnapsackPartition& kp);

// Subcomplex generated by the facets sigma(alpha o gamma, c).
OrderedComplex build_sigma_alpha(const Perm& alpha, const Composition& c);

// Polytabloid e_t as a chain of facets of Delta_c (tabloid <-> facet).
ChainElement polytabloid(const Tableau& t);

// Knapsack Specht machinery.  psi_tableau is the equivariant tableau-level
// map; psi evaluates a tabloid through its row-sorted representative.
ChainElement psi_tableau(const Perm& word, const Composition& d,
                         const KnapsackPartition& kp);
ChainElement psi(const Tabloid& s, const KnapsackPartition& kp);
// Image of the polytabloid: sum over the column stabilizer of B(d) of
// sign(gamma) psi_tableau(alpha o gamma).  Equals cycle_g_alpha_d.
ChainElement psi_polytabloid(const Tableau& t, const KnapsackPartition& kp);

// Action of a permutation on values, blockwise.
Osp act(const Perm& omega, const Osp& f);
ChainElement act(const Perm& omega, const ChainElement& x);
Tabloid act(const Perm& omega, const Tabloid& s);
Tableau act(const Perm& omega, const Tableau& t);

}  // namespace ptopo
