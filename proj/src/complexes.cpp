#include "ptopo/complexes.hpp"

#include <bit>
#include <functional>
#include <sstream>

namespace ptopo {

int mask_min(Mask m) {
  if (m == 0) throw std::invalid_argument("mask_min: empty set");
  return std::countr_zero(m) + 1;
}

int mask_max(Mask m) {
  if (m == 0) throw std::invalid_argument("mask_max: empty set");
  return 32 - std::countl_zero(m);
}

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  for (int i = 1; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

Composition Osp::type() const {
  std::vector<int> parts;
  for (Mask b : blocks) parts.push_back(std::popcount(b));
  return Composition(std::move(parts));
}

bool Osp::valid(int n) const {
  if (blocks.empty()) return false;
  Mask all = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] == 0 && i + 1 != blocks.size()) return false;
    if (all & blocks[i]) return false;
    all |= blocks[i];
  }
  return all == (n >= 32 ? ~Mask(0) : ((Mask(1) << n) - 1));
}

Osp Osp::merge(int i) const {
  if (i < 1 || i >= num_blocks()) throw std::out_of_range("Osp::merge");
  Osp r;
  r.blocks.reserve(blocks.size() - 1);
  for (int j = 0; j < num_blocks(); ++j) {
    if (j == i - 1) {
      r.blocks.push_back(blocks[j] | blocks[j + 1]);
      ++j;
    } else {
      r.blocks.push_back(blocks[j]);
    }
  }
  return r;
}

std::string Osp::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << '-';
    bool wide = false;
    for (int e : mask_elements(blocks[i]))
      if (e > 9) wide = true;
    bool first = true;
    for (int e : mask_elements(blocks[i])) {
      if (!first && wide) os << ' ';
      os << e;
      first = false;
    }
  }
  return os.str();
}

Osp parse_osp(const std::string& s, int n) {
  Osp f;
  Mask cur = 0;
  bool any = false;
  for (char ch : s) {
    if (ch == '-') {
      f.blocks.push_back(cur);
      cur = 0;
    } else if (ch >= '1' && ch <= '9') {
      cur |= Mask(1) << (ch - '1');
      any = true;
    } else if (ch == ' ') {
      continue;
    } else {
      throw std::invalid_argument("parse_osp: bad character (single-digit elements only)");
    }
  }
  f.blocks.push_back(cur);
  if (!any || !f.valid(n)) throw std::invalid_argument("parse_osp: not an ordered set partition of [n]");
  return f;
}

Osp sigma(const Perm& alpha, const Composition& c) {
  if (!c.valid()) throw std::invalid_argument("sigma: invalid composition");
  if (static_cast<int>(alpha.size()) != c.n())
    throw std::invalid_argument("sigma: size mismatch");
  Osp f;
  int pos = 0;
  for (int p : c.parts) {
    Mask b = 0;
    for (int t = 0; t < p; ++t) b |= Mask(1) << (alpha[pos + t] - 1);
    f.blocks.push_back(b);
    pos += p;
  }
  return f;
}

Perm sigma_inverse(const Osp& f) {
  Perm out;
  for (Mask b : f.blocks)
    for (int e : mask_elements(b)) out.push_back(e);
  return out;
}

std::vector<Mask> prefix_chain(const Osp& f) {
  std::vector<Mask> out;
  Mask acc = 0;
  for (size_t i = 0; i + 1 < f.blocks.size(); ++i) {
    acc |= f.blocks[i];
    out.push_back(acc);
  }
  return out;
}

// ---------------------------------------------------------------------------

long long HomologyProfile::betti_dim(int d) const {
  int i = d + 1;
  if (i < 0 || i >= static_cast<int>(betti.size())) return 0;
  return betti[i];
}

bool HomologyProfile::torsion_free() const {
  for (const auto& t : torsion)
    if (!t.empty()) return false;
  return true;
}

bool HomologyProfile::concentrated_in(int d, long long rank) const {
  if (!torsion_free()) return false;
  for (int i = 0; i < static_cast<int>(betti.size()); ++i) {
    long long expect = (i - 1 == d) ? rank : 0;
    if (betti[i] != expect) return false;
  }
  if (rank != 0 && betti_dim(d) != rank) return false;
  return true;
}

std::string HomologyProfile::to_string() const {
  std::ostringstream os;
  os << "betti[";
  for (size_t i = 0; i < betti.size(); ++i) {
    if (i) os << ',';
    os << "dim " << static_cast<int>(i) - 1 << ":" << betti[i];
  }
  os << ']';
  if (!torsion_free()) os << " (torsion present)";
  return os.str();
}

// ---------------------------------------------------------------------------

int OrderedComplex::max_blocks() const {
  for (int r = static_cast<int>(by_blocks.size()) - 1; r >= 1; --r)
    if (!by_blocks[r].empty()) return r;
  return 0;
}

long long OrderedComplex::num_faces() const {
  long long s = 0;
  for (const auto& lvl : by_blocks) s += static_cast<long long>(lvl.size());
  return s;
}

const std::vector<Osp>& OrderedComplex::facets() const {
  return by_blocks[max_blocks()];
}

void OrderedComplex::finalize() {
  index_of.clear();
  for (const auto& lvl : by_blocks)
    for (size_t i = 0; i < lvl.size(); ++i)
      index_of.emplace(lvl[i], static_cast<int>(i));
  // Closure check: every adjacent merge of a face is a face.
  for (const auto& lvl : by_blocks)
    for (const Osp& f : lvl)
      for (int i = 1; i < f.num_blocks(); ++i)
        if (!contains(f.merge(i)))
          throw std::logic_error("OrderedComplex: not closed under merges");
}

OrderedComplex OrderedComplex::from_face_set(int n, const std::vector<Osp>& faces) {
  OrderedComplex K;
  K.n = n;
  int maxr = 1;
  for (const Osp& f : faces) maxr = std::max(maxr, f.num_blocks());
  K.by_blocks.assign(maxr + 1, {});
  std::unordered_map<Osp, bool, OspHash> seen;
  for (const Osp& f : faces) {
    if (!f.valid(n)) throw std::invalid_argument("from_face_set: invalid face");
    if (seen.emplace(f, true).second) K.by_blocks[f.num_blocks()].push_back(f);
  }
  for (auto& lvl : K.by_blocks) std::sort(lvl.begin(), lvl.end());
  K.finalize();
  return K;
}

OrderedComplex OrderedComplex::closure_of_facets(int n, const std::vector<Osp>& facets) {
  std::unordered_map<Osp, bool, OspHash> seen;
  std::vector<Osp> stack = facets;
  std::vector<Osp> all;
  while (!stack.empty()) {
    Osp f = stack.back();
    stack.pop_back();
    if (!seen.emplace(f, true).second) continue;
    all.push_back(f);
    for (int i = 1; i < f.num_blocks(); ++i) stack.push_back(f.merge(i));
  }
  return from_face_set(n, all);
}

namespace {
// All ways to pick a block of `size` from `pool`, then recurse.
void faces_of_type_rec(int n, const std::vector<int>& parts, size_t idx, Mask pool,
                       Osp& cur, std::vector<Osp>& out) {
  if (idx == parts.size()) {
    out.push_back(cur);
    return;
  }
  int size = parts[idx];
  if (idx + 1 == parts.size()) {
    // Last block takes everything left (size is consistent by construction).
    cur.blocks.push_back(pool);
    out.push_back(cur);
    cur.blocks.pop_back();
    return;
  }
  // Enumerate subsets of pool with popcount == size.
  std::vector<int> elems = mask_elements(pool);
  int t = static_cast<int>(elems.size());
  std::vector<int> pick(size);
  std::function<void(int, int)> rec = [&](int start, int chosen) {
    if (chosen == size) {
      Mask b = 0;
      for (int j = 0; j < size; ++j) b |= Mask(1) << (elems[pick[j]] - 1);
      cur.blocks.push_back(b);
      faces_of_type_rec(n, parts, idx + 1, pool & ~b, cur, out);
      cur.blocks.pop_back();
      return;
    }
    for (int i = start; i <= t - (size - chosen); ++i) {
      pick[chosen] = i;
      rec(i + 1, chosen + 1);
    }
  };
  rec(0, 0);
}

std::vector<Osp> faces_of_type(int n, const Composition& d) {
  Mask full = (Mask(1) << n) - 1;
  std::vector<Osp> out;
  Osp cur;
  faces_of_type_rec(n, d.parts, 0, full, cur, out);
  return out;
}
}  // namespace

OrderedComplex build_delta_c(const Composition& c) {
  if (!c.valid()) throw std::invalid_argument("build_delta_c: invalid composition");
  int n = c.n();
  check_cap(n, caps().delta_complex, "build_delta_c");
  if (n < 1) throw std::invalid_argument("build_delta_c: n must be >= 1");
  // Coarsenings d >= c = subsets of the boundary set of c.
  std::set<int> bset = c.boundary_set();
  std::vector<int> bnd(bset.begin(), bset.end());
  int kb = static_cast<int>(bnd.size());
  std::vector<Osp> faces;
  for (unsigned mask = 0; mask < (1u << kb); ++mask) {
    std::vector<int> parts;
    int prev = 0;
    for (int i = 0; i < kb; ++i)
      if (mask & (1u << i)) {
        parts.push_back(bnd[i] - prev);
        prev = bnd[i];
      }
    parts.push_back(n - prev);  // zero when the subset contains n
    Composition d(std::move(parts));
    for (Osp& f : faces_of_type(n, d)) faces.push_back(std::move(f));
  }
  return OrderedComplex::from_face_set(n, faces);
}

namespace {
// All set partitions of the elements of `pool` (list of masks), via
// restricted-growth assignment.
void set_partitions_rec(const std::vector<int>& elems, size_t idx,
                        std::vector<Mask>& blocks,
                        const std::function<void(const std::vector<Mask>&)>& emit) {
  if (idx == elems.size()) {
    emit(blocks);
    return;
  }
  Mask bit = Mask(1) << (elems[idx] - 1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    blocks[b] |= bit;
    set_partitions_rec(elems, idx + 1, blocks, emit);
    blocks[b] &= ~bit;
  }
  blocks.push_back(bit);
  set_partitions_rec(elems, idx + 1, blocks, emit);
  blocks.pop_back();
}
}  // namespace

OrderedComplex build_lambda(const KnapsackPartition& kp) {
  int n = kp.n;
  check_cap(n, caps().lambda_complex, "build_lambda");
  if (n < 1) throw std::invalid_argument("build_lambda: n must be >= 1");
  Mask full = (Mask(1) << n) - 1;
  std::vector<Osp> faces;
  // Enumerate pointed set partitions (blocks, Z) with the filter type test,
  // then all orderings of the non-pointed blocks.
  for (Mask z = 0; z <= full; ++z) {
    Mask rest = full & ~z;
    std::vector<int> elems = mask_elements(rest);
    int zsize = std::popcount(z);
    auto emit = [&](const std::vector<Mask>& blocks) {
      std::vector<int> sizes;
      for (Mask b : blocks) sizes.push_back(std::popcount(b));
      if (!kp.type_in_filter(sizes, zsize)) return;
      std::vector<int> idx(blocks.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end());
      do {
        Osp f;
        for (int i : idx) f.blocks.push_back(blocks[i]);
        f.blocks.push_back(z);
        faces.push_back(std::move(f));
      } while (std::next_permutation(idx.begin(), idx.end()));
    };
    if (elems.empty()) {
      std::vector<Mask> none;
      emit(none);
    } else {
      std::vector<Mask> blocks{Mask(1) << (elems[0] - 1)};
      set_partitions_rec(elems, 1, blocks, emit);
    }
  }
  // The r = 1 face ([n]) corresponds to blocks = {}, z = full.
  return OrderedComplex::from_face_set(n, faces);
}

SparseMat boundary_matrix(const OrderedComplex& K, int r) {
  if (r < 2 || r > K.max_blocks()) {
    long long cols = (r >= 1 && r < static_cast<int>(K.by_blocks.size()))
                         ? static_cast<long long>(K.by_blocks[r].size())
                         : 0;
    return SparseMat(0, cols);
  }
  const auto& lower = K.by_blocks[r - 1];
  const auto& upper = K.by_blocks[r];
  SparseMat m(static_cast<long long>(lower.size()), static_cast<long long>(upper.size()));
  for (size_t j = 0; j < upper.size(); ++j) {
    const Osp& f = upper[j];
    int sign = 1;
    for (int i = 1; i < r; ++i) {
      Osp g = f.merge(i);
      auto it = K.index_of.find(g);
      if (it == K.index_of.end()) throw std::logic_error("boundary_matrix: missing face");
      m.add(it->second, static_cast<int>(j), sign);
      sign = -sign;
    }
  }
  return m;
}

namespace {
HomologyProfile homology_from_counts(
    const std::vector<long long>& counts,  // counts[i] = #faces of dim i-1
    const std::function<SparseMat(int)>& bmat) {
  // bmat(i) = boundary from dim (i-1) faces to dim (i-2) faces, i >= 1.
  int levels = static_cast<int>(counts.size());
  HomologyProfile hp;
  hp.top_dim = -2;
  for (int i = 0; i < levels; ++i)
    if (counts[i] > 0) hp.top_dim = i - 1;
  if (hp.top_dim == -2) return hp;
  std::vector<long long> ranks(levels + 1, 0);
  std::vector<std::vector<Int>> tors(levels + 1);
  for (int i = 1; i <= levels; ++i) {
    if (i >= levels || counts[i] == 0) continue;
    SnfResult s = smith_normal_form(bmat(i));
    ranks[i] = s.rank;
    tors[i] = s.torsion;
  }
  hp.betti.assign(hp.top_dim + 2, 0);
  hp.torsion.assign(hp.top_dim + 2, {});
  for (int i = 0; i <= hp.top_dim + 1; ++i) {
    hp.betti[i] = counts[i] - ranks[i] - (i + 1 <= levels ? ranks[i + 1] : 0);
    if (i + 1 <= levels) hp.torsion[i] = tors[i + 1];
  }
  return hp;
}
}  // namespace

HomologyProfile reduced_homology(const OrderedComplex& K) {
  int maxr = K.max_blocks();
  std::vector<long long> counts(maxr, 0);  // counts[i] = #faces with i+1 blocks (dim i-1)
  for (int r = 1; r <= maxr; ++r)
    counts[r - 1] = static_cast<long long>(K.by_blocks[r].size());
  return homology_from_counts(counts, [&](int i) { return boundary_matrix(K, i + 1); });
}

bool is_cone(const OrderedComplex& K, const Osp& apex) {
  if (apex.num_blocks() != 2 || !K.contains(apex)) return false;
  Mask ap = apex.blocks[0];
  for (const auto& lvl : K.by_blocks)
    for (const Osp& f : lvl) {
      std::vector<Mask> chain = prefix_chain(f);
      // Insert the apex prefix; must remain a chain and yield a face of K.
      bool already = false;
      std::vector<Mask> merged;
      bool ok = true;
      for (Mask p : chain) {
        if (p == ap) already = true;
        if ((p & ap) != p && (p & ap) != ap) ok = false;  // incomparable
      }
      if (!ok) return false;
      if (already) continue;
      merged = chain;
      merged.push_back(ap);
      std::sort(merged.begin(), merged.end(),
                [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
      Osp g;
      Mask prev = 0;
      Mask full = (Mask(1) << K.n) - 1;
      for (Mask p : merged) {
        g.blocks.push_back(p & ~prev);
        prev = p;
      }
      g.blocks.push_back(full & ~prev);
      if (!K.contains(g)) return false;
    }
  return true;
}

void ChainElement::add(const Osp& f, long long v) {
  if (v == 0) return;
  auto it = coeff.find(f);
  if (it == coeff.end()) {
    coeff.emplace(f, v);
  } else {
    it->second += v;
    if (it->second == 0) coeff.erase(it);
  }
}

ChainElement boundary(const ChainElement& x) {
  ChainElement out;
  out.num_blocks = x.num_blocks - 1;
  if (x.num_blocks <= 1) {
    out.num_blocks = 0;
    return out;  // boundary of (-1)-dimensional chains is zero
  }
  for (const auto& [f, v] : x.coeff) {
    int sign = 1;
    for (int i = 1; i < f.num_blocks(); ++i) {
      out.add(f.merge(i), sign * v);
      sign = -sign;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shelling.

namespace {
// Vertex sets of facets as sorted prefix masks.
std::vector<Mask> vertex_set(const Osp& f) {
  std::vector<Mask> v = prefix_chain(f);
  std::sort(v.begin(), v.end());
  return v;
}

size_t intersection_size(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  size_t i = 0, j = 0, cnt = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) { ++cnt; ++i; ++j; }
    else if (a[i] < b[j]) ++i;
    else ++j;
  }
  return cnt;
}

bool subset_of(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  return intersection_size(a, b) == a.size();
}
}  // namespace

ShellingResult verify_shelling(const OrderedComplex& K, const std::vector<Osp>& order) {
  ShellingResult res;
  res.order = order;
  if (order.empty()) return res;
  std::vector<std::vector<Mask>> vsets;
  for (const Osp& f : order) vsets.push_back(vertex_set(f));
  size_t dim = vsets[0].size();  // all facets same size (pure)
  for (const auto& v : vsets)
    if (v.size() != dim) throw std::invalid_argument("verify_shelling: complex not pure");
  for (size_t i = 0; i < order.size(); ++i) {
    // Maximal intersections with earlier facets must all have size dim-1;
    // spanning facet: all dim subsets of size dim-1 realized.
    std::vector<std::vector<Mask>> inters;
    for (size_t j = 0; j < i; ++j) {
      std::vector<Mask> inter;
      size_t a = 0, b = 0;
      while (a < vsets[i].size() && b < vsets[j].size()) {
        if (vsets[i][a] == vsets[j][b]) { inter.push_back(vsets[i][a]); ++a; ++b; }
        else if (vsets[i][a] < vsets[j][b]) ++a;
        else ++b;
      }
      inters.push_back(std::move(inter));
    }
    bool pure = true;
    size_t ridge_count = 0;
    std::set<std::vector<Mask>> ridges;
    for (const auto& inter : inters) {
      if (inter.size() == dim) throw std::invalid_argument("verify_shelling: repeated facet");
      if (inter.size() == dim - 1) ridges.insert(inter);
    }
    for (const auto& inter : inters) {
      if (inter.size() == dim - 1) continue;
      bool covered = false;
      for (const auto& r : ridges)
        if (subset_of(inter, r)) { covered = true; break; }
      if (!covered && dim >= 1) { pure = false; break; }
    }
    if (i > 0 && ridges.empty() && dim >= 1) pure = false;
    if (!pure) {
      res.fail_index = static_cast<int>(i);
      return res;
    }
    ridge_count = ridges.size();
    // A facet spans when its whole boundary is glued to earlier facets.
    // For dim == 0 (the facet is the empty face) that is vacuously true.
    if (ridge_count == dim) res.spanning.push_back(static_cast<int>(i));
  }
  res.is_shelling = true;
  return res;
}

ShellingResult shell(const OrderedComplex& K) {
  std::vector<Osp> facets = K.facets();
  std::sort(facets.begin(), facets.end(), [](const Osp& a, const Osp& b) {
    return sigma_inverse(a) < sigma_inverse(b);
  });
  ShellingResult res = verify_shelling(K, facets);
  if (res.is_shelling) return res;

  // Greedy backtracking fallback.
  size_t nf = facets.size();
  std::vector<std::vector<Mask>> vsets;
  for (const Osp& f : facets) vsets.push_back(vertex_set(f));
  size_t dim = vsets.empty() ? 0 : vsets[0].size();
  std::vector<int> chosen;
  std::vector<char> used(nf, 0);
  std::function<bool()> rec = [&]() -> bool {
    if (chosen.size() == nf) return true;
    for (size_t cand = 0; cand < nf; ++cand) {
      if (used[cand]) continue;
      // Check the shelling condition for facets[cand] against `chosen`.
      std::set<std::vector<Mask>> ridges;
      std::vector<std::vector<Mask>> small;
      bool ok = true;
      for (int j : chosen) {
        std::vector<Mask> inter;
        std::set_intersection(vsets[cand].begin(), vsets[cand].end(),
                              vsets[j].begin(), vsets[j].end(),
                              std::back_inserter(inter));
        if (inter.size() == dim - 1) ridges.insert(inter);
        else if (inter.size() < dim - 1) small.push_back(std::move(inter));
      }
      if (!chosen.empty() && ridges.empty() && dim >= 1) ok = false;
      for (const auto& inter : small) {
        if (!ok) break;
        bool covered = false;
        for (const auto& r : ridges)
          if (subset_of(inter, r)) { covered = true; break; }
        if (!covered) ok = false;
      }
      if (!ok) continue;
      used[cand] = 1;
      chosen.push_back(static_cast<int>(cand));
      if (rec()) return true;
      chosen.pop_back();
      used[cand] = 0;
    }
    return false;
  };
  if (!rec()) {
    ShellingResult fail;
    fail.used_fallback = true;
    return fail;
  }
  std::vector<Osp> order;
  for (int i : chosen) order.push_back(facets[i]);
  ShellingResult out = verify_shelling(K, order);
  out.used_fallback = true;
  return out;
}

// ---------------------------------------------------------------------------

HomologyProfile reduced_homology(const ChainFaces& K) {
  int levels = K.top_dim() + 2;  // include the empty face at index 0
  if (levels <= 0) return HomologyProfile{};
  std::vector<long long> counts(levels, 0);
  counts[0] = 1;  // empty face
  for (int d = 0; d <= K.top_dim(); ++d)
    counts[d + 1] = static_cast<long long>(K.by_dim[d].size());

  // Face lookup per dimension.
  std::vector<std::map<std::vector<int>, int>> index(K.top_dim() + 1);
  for (int d = 0; d <= K.top_dim(); ++d)
    for (size_t i = 0; i < K.by_dim[d].size(); ++i)
      index[d].emplace(K.by_dim[d][i], static_cast<int>(i));

  auto bmat = [&](int i) -> SparseMat {
    // From dim (i-1) to dim (i-2).
    int d = i - 1;
    if (d == 0) {
      SparseMat m(1, counts[1]);
      for (long long j = 0; j < counts[1]; ++j) m.add(0, static_cast<int>(j), 1);
      return m;
    }
    SparseMat m(counts[d], counts[d + 1]);
    for (size_t j = 0; j < K.by_dim[d].size(); ++j) {
      const auto& face = K.by_dim[d][j];
      for (int drop = 0; drop <= d; ++drop) {
        std::vector<int> sub;
        sub.reserve(face.size() - 1);
        for (int t = 0; t <= d; ++t)
          if (t != drop) sub.push_back(face[t]);
        auto it = index[d - 1].find(sub);
        if (it == index[d - 1].end()) throw std::logic_error("ChainFaces: missing face");
        m.add(it->second, static_cast<int>(j), drop % 2 == 0 ? 1 : -1);
      }
    }
    return m;
  };
  return homology_from_counts(counts, bmat);
}

ChainFaces barycentric_subdivision(const OrderedComplex& K) {
  // Vertices = nonempty faces of K (those with >= 2 blocks); faces = chains
  // in the face order (f <= g iff prefix_chain(f) subset of prefix_chain(g)).
  std::vector<Osp> verts;
  for (int r = 2; r < static_cast<int>(K.by_blocks.size()); ++r)
    for (const Osp& f : K.by_blocks[r]) verts.push_back(f);
  int nv = static_cast<int>(verts.size());
  std::vector<std::vector<Mask>> vchains;
  for (const Osp& f : verts) vchains.push_back(vertex_set(f));
  // Order vertices by dimension so chains are increasing in index order.
  std::vector<int> idx(nv);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (vchains[a].size() != vchains[b].size()) return vchains[a].size() < vchains[b].size();
    return vchains[a] < vchains[b];
  });
  std::vector<std::vector<Mask>> ordered(nv);
  for (int i = 0; i < nv; ++i) ordered[i] = vchains[idx[i]];

  ChainFaces out;
  out.num_vertices = nv;
  std::vector<std::vector<std::vector<int>>> by_dim;
  std::vector<int> chain;
  std::function<void(int)> rec = [&](int start) {
    if (!chain.empty()) {
      int d = static_cast<int>(chain.size()) - 1;
      if (d >= static_cast<int>(by_dim.size())) by_dim.resize(d + 1);
      by_dim[d].push_back(chain);
    }
    for (int next = start; next < nv; ++next) {
      if (!chain.empty()) {
        const auto& prev = ordered[chain.back()];
        const auto& cand = ordered[next];
        if (prev.size() >= cand.size() || !subset_of(prev, cand)) continue;
      }
      chain.push_back(next);
      rec(next + 1);
      chain.pop_back();
    }
  };
  rec(0);
  out.by_dim = std::move(by_dim);
  return out;
}

}  // namespace ptopo
