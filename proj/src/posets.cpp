#include "ptopo/posets.hpp"

#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

namespace ptopo {

void PointedSetPartition::canonicalize() {
  std::sort(blocks.begin(), blocks.end(),
            [](Mask a, Mask b) { return mask_min(a) < mask_min(b); });
}

bool PointedSetPartition::valid() const {
  Mask all = zero;
  for (Mask b : blocks) {
    if (b == 0) return false;
    if (all & b) return false;
    all |= b;
  }
  return all == (Mask(1) << n) - 1;
}

std::pair<std::vector<int>, int> PointedSetPartition::type() const {
  std::vector<int> sizes;
  for (Mask b : blocks) sizes.push_back(std::popcount(b));
  std::sort(sizes.rbegin(), sizes.rend());
  return {sizes, std::popcount(zero)};
}

bool PointedSetPartition::leq(const PointedSetPartition& other) const {
  if ((zero & other.zero) != zero) return false;
  for (Mask b : blocks) {
    if ((b & other.zero) == b) continue;
    bool inside = false;
    for (Mask ob : other.blocks)
      if ((b & ob) == b) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

std::string PointedSetPartition::to_string() const {
  std::ostringstream os;
  for (Mask b : blocks) {
    for (int e : mask_elements(b)) os << e;
    os << '|';
  }
  os << '_';
  for (int e : mask_elements(zero)) os << e;
  return os.str();
}

std::vector<PointedSetPartition> all_pointed_set_partitions(int n) {
  check_cap(n, caps().pointed_lattice, "all_pointed_set_partitions");
  std::vector<PointedSetPartition> out;
  Mask full = (n == 0) ? 0 : (Mask(1) << n) - 1;
  for (Mask z = 0;; ++z) {
    z &= full;
    // iterate all subsets z of full
    static_cast<void>(0);
    std::vector<int> rest = mask_elements(full & ~z);
    std::vector<Mask> blocks;
    std::function<void(size_t)> rec = [&](size_t idx) {
      if (idx == rest.size()) {
        PointedSetPartition p;
        p.blocks = blocks;
        p.zero = z;
        p.n = n;
        p.canonicalize();
        out.push_back(std::move(p));
        return;
      }
      Mask bit = Mask(1) << (rest[idx] - 1);
      for (size_t b = 0; b < blocks.size(); ++b) {
        blocks[b] |= bit;
        rec(idx + 1);
        blocks[b] &= ~bit;
      }
      blocks.push_back(bit);
      rec(idx + 1);
      blocks.pop_back();
    };
    rec(0);
    if (z == full) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> FinitePoset::cover_relations() const {
  std::vector<std::pair<int, int>> covers;
  int N = size();
  for (int y = 0; y < N; ++y) {
    for (size_t x = strict[y].find_first(); x != boost::dynamic_bitset<>::npos;
         x = strict[y].find_next(x)) {
      // x < y is a cover iff no z with x < z < y.
      boost::dynamic_bitset<> between = strict[y];
      // z < y and x < z
      bool found = false;
      for (size_t z = between.find_first(); z != boost::dynamic_bitset<>::npos;
           z = between.find_next(z)) {
        if (z != x && strict[z][x]) {
          found = true;
          break;
        }
      }
      if (!found) covers.emplace_back(static_cast<int>(x), y);
    }
  }
  return covers;
}

std::optional<int> FinitePoset::bottom() const {
  int N = size();
  for (int b = 0; b < N; ++b)
    if (static_cast<int>(strict[b].count()) == 0) {
      bool below_all = true;
      for (int y = 0; y < N && below_all; ++y)
        if (y != b && !strict[y][static_cast<size_t>(b)]) below_all = false;
      if (below_all) return b;
    }
  return std::nullopt;
}

std::optional<int> FinitePoset::top() const {
  int N = size();
  for (int t = 0; t < N; ++t)
    if (static_cast<int>(strict[t].count()) == N - 1) return t;
  return std::nullopt;
}

FinitePoset FinitePoset::with_bottom(const std::string& label) const {
  FinitePoset q;
  int N = size();
  q.labels.push_back(label);
  q.labels.insert(q.labels.end(), labels.begin(), labels.end());
  q.strict.assign(N + 1, boost::dynamic_bitset<>(N + 1));
  for (int y = 0; y < N; ++y) {
    q.strict[y + 1][0] = true;
    for (size_t x = strict[y].find_first(); x != boost::dynamic_bitset<>::npos;
         x = strict[y].find_next(x))
      q.strict[y + 1][x + 1] = true;
  }
  return q;
}

FinitePoset FinitePoset::induced(const std::vector<int>& keep) const {
  FinitePoset q;
  int M = static_cast<int>(keep.size());
  q.labels.reserve(M);
  for (int i : keep) q.labels.push_back(labels[i]);
  q.strict.assign(M, boost::dynamic_bitset<>(M));
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b)
      if (strict[keep[a]][static_cast<size_t>(keep[b])]) q.strict[a][b] = true;
  return q;
}

FinitePoset FinitePoset::without(int idx) const {
  std::vector<int> keep;
  for (int i = 0; i < size(); ++i)
    if (i != idx) keep.push_back(i);
  return induced(keep);
}

std::vector<long long> mobius_from_bottom(const FinitePoset& p) {
  auto b = p.bottom();
  if (!b) throw std::invalid_argument("mobius_from_bottom: no unique bottom");
  int N = p.size();
  std::vector<int> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int c) {
    return p.strict[a].count() < p.strict[c].count();
  });
  std::vector<long long> mu(N, 0);
  mu[*b] = 1;
  for (int z : order) {
    if (z == *b) continue;
    long long s = 0;
    for (size_t y = p.strict[z].find_first(); y != boost::dynamic_bitset<>::npos;
         y = p.strict[z].find_next(y))
      s += mu[y];
    mu[z] = -s;
  }
  return mu;
}

long long mobius(const FinitePoset& p) {
  auto t = p.top();
  if (!t) throw std::invalid_argument("mobius: no unique top");
  return mobius_from_bottom(p)[*t];
}

bool has_join(const FinitePoset& p, int x, int y) {
  int N = p.size();
  boost::dynamic_bitset<> uppers(N);
  for (int u = 0; u < N; ++u)
    if (p.leq(x, u) && p.leq(y, u)) uppers[u] = true;
  if (uppers.none()) return false;
  // unique minimal element of uppers
  int minimal = 0;
  for (size_t u = uppers.find_first(); u != boost::dynamic_bitset<>::npos;
       u = uppers.find_next(u)) {
    bool is_min = true;
    for (size_t v = uppers.find_first(); v != boost::dynamic_bitset<>::npos;
         v = uppers.find_next(v))
      if (v != u && p.strict[u][v]) {
        is_min = false;
        break;
      }
    if (is_min) ++minimal;
  }
  return minimal == 1;
}

LatticeCheck check_lattice(const FinitePoset& p) {
  LatticeCheck res;
  int N = p.size();
  for (int x = 0; x < N && res.is_lattice; ++x)
    for (int y = x + 1; y < N && res.is_lattice; ++y) {
      if (!has_join(p, x, y)) {
        res.is_lattice = false;
        res.witness = {x, y};
        res.which = "join";
        break;
      }
      // meet: joins in the dual
      boost::dynamic_bitset<> lowers(N);
      for (int u = 0; u < N; ++u)
        if (p.leq(u, x) && p.leq(u, y)) lowers[u] = true;
      int maximal = 0;
      bool any = lowers.any();
      for (size_t u = lowers.find_first(); u != boost::dynamic_bitset<>::npos;
           u = lowers.find_next(u)) {
        bool is_max = true;
        for (size_t v = lowers.find_first(); v != boost::dynamic_bitset<>::npos;
             v = lowers.find_next(v))
          if (v != u && p.strict[v][u]) {
            is_max = false;
            break;
          }
        if (is_max) ++maximal;
      }
      if (!any || maximal != 1) {
        res.is_lattice = false;
        res.witness = {x, y};
        res.which = "meet";
      }
    }
  return res;
}

ChainFaces order_complex(const FinitePoset& p) {
  ChainFaces out;
  int N = p.size();
  out.num_vertices = N;
  // Linear extension so chains are increasing in relabeled order.
  std::vector<int> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (p.strict[a].count() != p.strict[b].count())
      return p.strict[a].count() < p.strict[b].count();
    return a < b;
  });
  std::vector<int> pos(N);
  for (int i = 0; i < N; ++i) pos[order[i]] = i;

  std::vector<int> chain;
  std::function<void(int)> rec = [&](int start) {
    if (!chain.empty()) {
      int d = static_cast<int>(chain.size()) - 1;
      if (d >= static_cast<int>(out.by_dim.size())) out.by_dim.resize(d + 1);
      out.by_dim[d].push_back(chain);
    }
    for (int i = start; i < N; ++i) {
      if (!chain.empty() && !p.strict[order[i]][static_cast<size_t>(order[chain.back()])])
        continue;
      chain.push_back(i);
      rec(i + 1);
      chain.pop_back();
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------

int PointedPoset::index_of(const PointedSetPartition& x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x)
    throw std::invalid_argument("PointedPoset::index_of: element not present");
  return static_cast<int>(it - elements.begin());
}

namespace {
PointedPoset poset_from_elements(std::vector<PointedSetPartition> elems) {
  std::sort(elems.begin(), elems.end());
  PointedPoset out;
  int N = static_cast<int>(elems.size());
  out.poset.labels.reserve(N);
  for (const auto& e : elems) out.poset.labels.push_back(e.to_string());
  out.poset.strict.assign(N, boost::dynamic_bitset<>(N));
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y)
      if (x != y && elems[x].leq(elems[y])) out.poset.strict[y][x] = true;
  out.elements = std::move(elems);
  return out;
}
}  // namespace

PointedPoset build_pointed_partition_lattice(int n) {
  return poset_from_elements(all_pointed_set_partitions(n));
}

PointedPoset build_subposet_pi_c(const Composition& c) {
  if (!c.valid()) throw std::invalid_argument("build_subposet_pi_c: invalid composition");
  int n = c.n();
  check_cap(n, caps().pointed_lattice, "build_subposet_pi_c");
  // Allowed types: multiset of the non-final parts plus pointed final part,
  // over all d >= c.
  std::set<std::pair<std::vector<int>, int>> allowed;
  std::set<int> bset = c.boundary_set();
  std::vector<int> bnd(bset.begin(), bset.end());
  int kb = static_cast<int>(bnd.size());
  for (unsigned mask = 0; mask < (1u << kb); ++mask) {
    std::vector<int> parts;
    int prev = 0;
    for (int i = 0; i < kb; ++i)
      if (mask & (1u << i)) {
        parts.push_back(bnd[i] - prev);
        prev = bnd[i];
      }
    int last = n - prev;
    std::sort(parts.rbegin(), parts.rend());
    allowed.insert({parts, last});
  }
  std::vector<PointedSetPartition> elems;
  for (const auto& p : all_pointed_set_partitions(n))
    if (allowed.count(p.type())) elems.push_back(p);
  return poset_from_elements(std::move(elems));
}

PointedPoset build_filter(const KnapsackPartition& kp) {
  int n = kp.n;
  check_cap(n, caps().pointed_lattice, "build_filter");
  std::vector<PointedSetPartition> elems;
  for (const auto& p : all_pointed_set_partitions(n)) {
    auto [sizes, z] = p.type();
    if (kp.type_in_filter(sizes, z)) elems.push_back(p);
  }
  return poset_from_elements(std::move(elems));
}

PointedPoset build_arrangement_intersection_lattice(int n) {
  if (n > 4) throw std::domain_error("build_arrangement_intersection_lattice: n too large");
  // Hyperplanes: x_i = x_j (i < j) and x_i = 0.  A subset closes to a
  // pointed set partition via union-find with a zero class.
  struct Hyperplane { int a, b; };  // b == 0 encodes x_a = 0
  std::vector<Hyperplane> hs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) hs.push_back({i, j});
  for (int i = 1; i <= n; ++i) hs.push_back({i, 0});
  std::set<PointedSetPartition> subspaces;
  size_t H = hs.size();
  for (unsigned mask = 0; mask < (1u << H); ++mask) {
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (size_t h = 0; h < H; ++h)
      if (mask & (1u << h)) parent[find(hs[h].a)] = find(hs[h].b);
    PointedSetPartition p;
    p.n = n;
    std::map<int, Mask> classes;
    for (int i = 1; i <= n; ++i) classes[find(i)] |= Mask(1) << (i - 1);
    for (auto& [root, bits] : classes) {
      if (find(root) == find(0))
        p.zero |= bits;
      else
        p.blocks.push_back(bits);
    }
    p.canonicalize();
    subspaces.insert(std::move(p));
  }
  return poset_from_elements(
      std::vector<PointedSetPartition>(subspaces.begin(), subspaces.end()));
}

}  // namespace ptopo
