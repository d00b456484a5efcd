#include "ptopo/representation.hpp"

#include <bit>

namespace ptopo {

BorderStrip border_strip(const Composition& c) {
  IntervalDecomposition id = interval_decomposition(c);
  BorderStrip bs;
  bs.c = c;
  int n = c.n();
  bs.box.resize(n);
  for (int j = 1; j <= n; ++j) {
    int row = 0, col = 0;
    for (size_t i = 0; i < id.rows.size(); ++i)
      if (id.rows[i].first <= j && j <= id.rows[i].second) row = static_cast<int>(i) + 1;
    for (size_t i = 0; i < id.cols.size(); ++i)
      if (id.cols[i].first <= j && j <= id.cols[i].second) col = static_cast<int>(i) + 1;
    bs.box[j - 1] = {row, col};
  }
  return bs;
}

Tableau tableau_of_permutation(const Perm& alpha, const Composition& c) {
  if (static_cast<int>(alpha.size()) != c.n())
    throw std::invalid_argument("tableau_of_permutation: size mismatch");
  return Tableau{border_strip(c), alpha};
}

Perm permutation_of_tableau(const Tableau& t) { return t.entries; }

bool is_standard(const Tableau& t) {
  int n = t.shape.n();
  for (int j = 1; j <= n; ++j)
    for (int l = j + 1; l <= n; ++l) {
      auto [rj, cj] = t.shape.box[j - 1];
      auto [rl, cl] = t.shape.box[l - 1];
      // Reading to the northeast: l > j within a row means l is further
      // east; within a column it means l is further north.
      if (rj == rl && !(t.entries[j - 1] < t.entries[l - 1])) return false;
      if (cj == cl && !(t.entries[j - 1] > t.entries[l - 1])) return false;
    }
  return true;
}

long long syt_count(const BorderStrip& shape) {
  int n = shape.n();
  Perm fill = identity_perm(n);
  long long count = 0;
  do {
    if (is_standard(Tableau{shape, fill})) ++count;
  } while (std::next_permutation(fill.begin(), fill.end()));
  return count;
}

Tabloid tabloid_of_tableau(const Tableau& t) {
  Tabloid s;
  s.shape_c = t.shape.c;
  int k = t.shape.c.k();
  s.rows.assign(k, 0);
  for (int j = 1; j <= t.shape.n(); ++j)
    s.rows[t.shape.box[j - 1].first - 1] |= Mask(1) << (t.entries[j - 1] - 1);
  return s;
}

Osp facet_of_tabloid(const Tabloid& s) {
  Osp f;
  f.blocks = s.rows;
  return f;
}

Tabloid tabloid_of_facet(const Osp& f, const Composition& c) {
  if (f.type() != c) throw std::invalid_argument("tabloid_of_facet: type mismatch");
  Tabloid s;
  s.shape_c = c;
  s.rows = f.blocks;
  return s;
}

std::vector<std::pair<Perm, int>> column_stabilizer(const Composition& c) {
  IntervalDecomposition id = interval_decomposition(c);
  int n = c.n();
  std::vector<std::pair<Perm, int>> out{{identity_perm(n), 1}};
  for (auto [lo, hi] : id.cols) {
    if (lo == hi) continue;
    std::vector<std::pair<Perm, int>> next;
    Perm local = identity_perm(hi - lo + 1);
    do {
      int sgn = perm_sign(local);
      for (const auto& [base, bsgn] : out) {
        Perm g = base;
        for (int t = 0; t < hi - lo + 1; ++t) g[lo - 1 + t] = lo + local[t] - 1;
        next.emplace_back(std::move(g), bsgn * sgn);
      }
    } while (std::next_permutation(local.begin(), local.end()));
    out = std::move(next);
  }
  return out;
}

ChainElement cycle_g_alpha(const Perm& alpha, const Composition& c) {
  ChainElement x;
  x.num_blocks = c.k();
  for (const auto& [gamma, sgn] : column_stabilizer(c))
    x.add(sigma(compose(alpha, gamma), c), sgn);
  return x;
}

ChainElement cycle_g_alpha_d(const Perm& alpha, const Composition& d,
                             const KnapsackPartition& kp) {
  ChainElement x;
  x.num_blocks = static_cast<int>(kp.lambda.size()) + 1;
  auto wset = kp.w_set(d);
  for (const auto& [gamma, sgn] : column_stabilizer(d)) {
    Perm word = compose(alpha, gamma);
    for (const auto& [c, csgn] : wset) x.add(sigma(word, c), sgn * csgn);
  }
  return x;
}

OrderedComplex build_sigma_alpha(const Perm& alpha, const Composition& c) {
  std::vector<Osp> facets;
  for (const auto& [gamma, sgn] : column_stabilizer(c))
    facets.push_back(sigma(compose(alpha, gamma), c));
  return OrderedComplex::closure_of_facets(c.n(), facets);
}

ChainElement polytabloid(const Tableau& t) {
  return cycle_g_alpha(t.entries, t.shape.c);
}

ChainElement psi_tableau(const Perm& word, const Composition& d,
                         const KnapsackPartition& kp) {
  ChainElement x;
  x.num_blocks = static_cast<int>(kp.lambda.size()) + 1;
  for (const auto& [c, csgn] : kp.w_set(d)) x.add(sigma(word, c), csgn);
  return x;
}

ChainElement psi(const Tabloid& s, const KnapsackPartition& kp) {
  Perm word;
  for (Mask row : s.rows)
    for (int e : mask_elements(row)) word.push_back(e);
  return psi_tableau(word, s.shape_c, kp);
}

ChainElement psi_polytabloid(const Tableau& t, const KnapsackPartition& kp) {
  ChainElement x;
  x.num_blocks = static_cast<int>(kp.lambda.size()) + 1;
  const Composition& d = t.shape.c;
  auto wset = kp.w_set(d);
  for (const auto& [gamma, sgn] : column_stabilizer(d)) {
    Perm word = compose(t.entries, gamma);
    for (const auto& [c, csgn] : wset) x.add(sigma(word, c), sgn * csgn);
  }
  return x;
}

Osp act(const Perm& omega, const Osp& f) {
  Osp r;
  r.blocks.reserve(f.blocks.size());
  for (Mask b : f.blocks) {
    Mask nb = 0;
    for (int e : mask_elements(b)) nb |= Mask(1) << (omega[e - 1] - 1);
    r.blocks.push_back(nb);
  }
  return r;
}

ChainElement act(const Perm& omega, const ChainElement& x) {
  ChainElement r;
  r.num_blocks = x.num_blocks;
  for (const auto& [f, v] : x.coeff) r.add(act(omega, f), v);
  return r;
}

Tabloid act(const Perm& omega, const Tabloid& s) {
  Tabloid r;
  r.shape_c = s.shape_c;
  for (Mask row : s.rows) {
    Mask nb = 0;
    for (int e : mask_elements(row)) nb |= Mask(1) << (omega[e - 1] - 1);
    r.rows.push_back(nb);
  }
  return r;
}

Tableau act(const Perm& omega, const Tableau& t) {
  Tableau r = t;
  for (int& v : r.entries) v = omega[v - 1];
  return r;
}

}  // namespace ptopo
