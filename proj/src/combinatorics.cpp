#include "ptopo/combinatorics.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace ptopo {

Perm compose(const Perm& a, const Perm& g) {
  if (a.size() != g.size()) throw std::invalid_argument("compose: size mismatch");
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[g[i] - 1];
  return r;
}

Perm identity_perm(int n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 1);
  return r;
}

int perm_sign(const Perm& a) {
  int inv = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

bool weak_bruhat_leq(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weak_bruhat_leq: size mismatch");
  int n = static_cast<int>(a.size());
  // pos[v] = position of value v.
  std::vector<int> pa(n + 1), pb(n + 1);
  for (int i = 0; i < n; ++i) { pa[a[i]] = i; pb[b[i]] = i; }
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (pa[u] > pa[v] && !(pb[u] > pb[v])) return false;
  return true;
}

bool Composition::valid() const {
  if (parts.empty()) return false;
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] <= 0) return false;
  return parts.back() >= 0;
}

std::set<int> Composition::boundary_set() const {
  std::set<int> s;
  int acc = 0;
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    acc += parts[i];
    s.insert(acc);
  }
  if (!parts.empty() && parts.back() == 0) s.insert(n());
  return s;
}

std::string Composition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

Composition descent_composition(const Perm& a) {
  if (!is_permutation_word(a)) throw std::invalid_argument("descent_composition: not a permutation");
  std::vector<int> parts;
  int run = 1;
  for (size_t i = 1; i < a.size(); ++i) {
    if (a[i - 1] > a[i]) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

bool composition_leq(const Composition& c, const Composition& d) {
  if (!c.valid() || !d.valid()) throw std::invalid_argument("composition_leq: invalid composition");
  if (c.n() != d.n()) throw std::invalid_argument("composition_leq: different n");
  std::set<int> bc = c.boundary_set(), bd = d.boundary_set();
  return std::includes(bc.begin(), bc.end(), bd.begin(), bd.end());
}

Composition complement_composition(const Composition& c) {
  if (!c.valid()) throw std::invalid_argument("complement_composition: invalid composition");
  if (!c.last_positive())
    throw std::invalid_argument("complement_composition: last part must be positive");
  int n = c.n();
  std::set<int> b = c.boundary_set();
  std::vector<int> parts;
  int prev = 0;
  for (int i = 1; i <= n - 1; ++i) {
    if (!b.count(i)) {  // i is a boundary of the complement
      parts.push_back(i - prev);
      prev = i;
    }
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

IntervalDecomposition interval_decomposition(const Composition& c) {
  if (!c.last_positive())
    throw std::invalid_argument("interval_decomposition: last part must be positive");
  IntervalDecomposition r;
  int pos = 1;
  for (int p : c.parts) {
    r.rows.emplace_back(pos, pos + p - 1);
    pos += p;
  }
  Composition cc = complement_composition(c);
  pos = 1;
  for (int p : cc.parts) {
    r.cols.emplace_back(pos, pos + p - 1);
    pos += p;
  }
  return r;
}

namespace {
std::mutex g_mutex;
std::unordered_map<int, std::map<Composition, std::vector<Perm>>> g_descent_cache;
}  // namespace

const std::map<Composition, std::vector<Perm>>& descent_classes(int n) {
  check_cap(n, caps().beta_enumeration, "descent class enumeration");
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_descent_cache.find(n);
  if (it != g_descent_cache.end()) return it->second;
  std::map<Composition, std::vector<Perm>> table;
  Perm p = identity_perm(n);
  do {
    table[descent_composition(p)].push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return g_descent_cache.emplace(n, std::move(table)).first->second;
}

long long beta(const Composition& c) {
  if (!c.valid()) throw std::invalid_argument("beta: invalid composition");
  if (!c.last_positive()) return c.k() == 1 ? 1 : 0;
  const auto& table = descent_classes(c.n());
  auto it = table.find(c);
  return it == table.end() ? 0 : static_cast<long long>(it->second.size());
}

std::vector<Perm> perms_with_descent_composition(const Composition& c) {
  if (!c.last_positive()) {
    if (c.k() == 1) return {Perm{}};
    return {};
  }
  const auto& table = descent_classes(c.n());
  auto it = table.find(c);
  return it == table.end() ? std::vector<Perm>{} : it->second;
}

std::vector<Composition> all_positive_compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) return out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int prev = 0;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) {
        parts.push_back(i - prev);
        prev = i;
      }
    parts.push_back(n - prev);
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Composition> all_pointed_compositions(int n) {
  std::vector<Composition> out = all_positive_compositions(n);
  for (const Composition& c : all_positive_compositions(n)) {
    std::vector<int> parts = c.parts;
    parts.push_back(0);
    out.emplace_back(std::move(parts));
  }
  if (n == 0) out.emplace_back(std::vector<int>{0});
  return out;
}

// ---------------------------------------------------------------------------

bool is_knapsack(const std::vector<int>& lambda) {
  for (int v : lambda)
    if (v <= 0) throw std::invalid_argument("is_knapsack: parts must be positive");
  // Enumerate index subsets; two different sub-multisets with equal sums
  // violate the knapsack property.
  std::map<int, std::vector<int>> seen;  // sum -> decreasing multiset
  int k = static_cast<int>(lambda.size());
  if (k > 24) throw std::invalid_argument("is_knapsack: too many parts");
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> ms;
    int s = 0;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        ms.push_back(lambda[i]);
        s += lambda[i];
      }
    std::sort(ms.rbegin(), ms.rend());
    auto it = seen.find(s);
    if (it == seen.end())
      seen.emplace(s, std::move(ms));
    else if (it->second != ms)
      return false;
  }
  return true;
}

KnapsackPartition::KnapsackPartition(std::vector<int> lambda_in, int m_in,
                                     bool allow_non_knapsack)
    : lambda(std::move(lambda_in)), m(m_in) {
  if (m < 0) throw std::invalid_argument("KnapsackPartition: m must be >= 0");
  std::sort(lambda.rbegin(), lambda.rend());
  if (!allow_non_knapsack && !is_knapsack(lambda))
    throw std::invalid_argument("KnapsackPartition: lambda is not a knapsack partition");
  n = m + std::accumulate(lambda.begin(), lambda.end(), 0);
  int k = static_cast<int>(lambda.size());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> ms;
    int s = 0;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        ms.push_back(lambda[i]);
        s += lambda[i];
      }
    std::sort(ms.rbegin(), ms.rend());
    reps.emplace(s, std::move(ms));  // unique for knapsack lambda
  }
}

int KnapsackPartition::kappa(int s) const {
  auto it = reps.find(s);
  if (it == reps.end()) throw std::domain_error("kappa: value not a sum of parts");
  return it->second.back();
}

bool KnapsackPartition::type_in_filter(const std::vector<int>& block_sizes,
                                       int zsize) const {
  if (zsize < m) return false;
  std::vector<int> pool = lambda;  // multiset of remaining parts
  // Each non-pointed block must be a union of parts; the leftover plus m
  // must account for the pointed block.  With unique representations this
  // is a direct lookup.
  std::vector<int> used;
  for (int b : block_sizes) {
    auto it = reps.find(b);
    if (it == reps.end()) return false;
    for (int p : it->second) used.push_back(p);
  }
  if (zsize > m) {
    auto it = reps.find(zsize - m);
    if (it == reps.end()) return false;
    for (int p : it->second) used.push_back(p);
  }
  std::sort(used.rbegin(), used.rend());
  return used == lambda;
}

namespace {
void v_set_rec(const KnapsackPartition& kp, std::vector<int>& remaining,
               std::vector<int>& prefix, std::set<Composition>& out) {
  if (remaining.empty()) {
    std::vector<int> parts = prefix;
    parts.push_back(kp.m);
    out.insert(Composition(std::move(parts)));
    return;
  }
  // Choose the first group: a nonempty subset of the remaining part indices
  // with pairwise distinct values.
  int r = static_cast<int>(remaining.size());
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    std::set<int> values;
    int s = 0;
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      if (mask & (1u << i)) {
        if (!values.insert(remaining[i]).second) ok = false;
        s += remaining[i];
      }
    if (!ok) continue;
    std::vector<int> rest;
    for (int i = 0; i < r; ++i)
      if (!(mask & (1u << i))) rest.push_back(remaining[i]);
    prefix.push_back(s);
    v_set_rec(kp, rest, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<Composition> KnapsackPartition::v_set() const {
  std::set<Composition> out;
  std::vector<int> remaining = lambda;
  std::vector<int> prefix;
  v_set_rec(*this, remaining, prefix, out);
  return std::vector<Composition>(out.begin(), out.end());
}

bool KnapsackPartition::is_valid_v_member(const Composition& d) const {
  if (!d.valid() || d.k() < 1) return false;
  if (d.parts.back() != m) return false;
  std::vector<int> used;
  for (int i = 0; i + 1 < d.k(); ++i) {
    auto it = reps.find(d.parts[i]);
    if (it == reps.end()) return false;
    std::set<int> distinct(it->second.begin(), it->second.end());
    if (static_cast<int>(distinct.size()) != static_cast<int>(it->second.size()))
      return false;  // repeated values: not a sum of distinct parts
    for (int p : it->second) used.push_back(p);
  }
  std::sort(used.rbegin(), used.rend());
  return used == lambda;
}

Composition KnapsackPartition::epsilon(const Composition& d) const {
  if (!is_valid_v_member(d)) throw std::invalid_argument("epsilon: d not in V(lambda, m)");
  std::vector<int> parts;
  for (int i = 0; i + 1 < d.k(); ++i) {
    const auto& rep = reps.at(d.parts[i]);
    parts.insert(parts.end(), rep.begin(), rep.end());
  }
  parts.push_back(m);
  return Composition(std::move(parts));
}

std::vector<std::pair<Composition, int>> KnapsackPartition::w_set(
    const Composition& d) const {
  if (!is_valid_v_member(d)) throw std::invalid_argument("w_set: d not in V(lambda, m)");
  std::vector<std::vector<int>> blocks;  // decreasing rep per entry of d
  for (int i = 0; i + 1 < d.k(); ++i) blocks.push_back(reps.at(d.parts[i]));
  std::vector<std::pair<Composition, int>> out;
  // Cartesian product of orderings of each block, with the product of the
  // signs of the permutations taking the decreasing list to the ordering.
  std::vector<std::vector<std::pair<std::vector<int>, int>>> per_block;
  for (const auto& rep : blocks) {
    std::vector<std::pair<std::vector<int>, int>> options;
    int t = static_cast<int>(rep.size());
    Perm idx = identity_perm(t);
    do {
      std::vector<int> arranged(t);
      for (int i = 0; i < t; ++i) arranged[i] = rep[idx[i] - 1];
      options.emplace_back(arranged, perm_sign(idx));
    } while (std::next_permutation(idx.begin(), idx.end()));
    per_block.push_back(std::move(options));
  }
  std::vector<size_t> pick(per_block.size(), 0);
  while (true) {
    std::vector<int> parts;
    int sign = 1;
    for (size_t i = 0; i < per_block.size(); ++i) {
      const auto& [arr, s] = per_block[i][pick[i]];
      parts.insert(parts.end(), arr.begin(), arr.end());
      sign *= s;
    }
    parts.push_back(m);
    out.emplace_back(Composition(std::move(parts)), sign);
    size_t j = 0;
    for (; j < pick.size(); ++j) {
      if (++pick[j] < per_block[j].size()) break;
      pick[j] = 0;
    }
    if (j == pick.size()) break;
  }
  // Distinct values within each block mean no duplicate compositions arise.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const Caps& caps() {
  static Caps c = [] {
    Caps v;
    if (const char* env = std::getenv("PARTITION_TOPOLOGY_CAP")) {
      int cap = std::atoi(env);
      if (cap > 0) {
        v.pointed_lattice = cap;
        v.delta_complex = cap;
        v.lambda_complex = cap;
        v.beta_enumeration = std::max(cap, v.beta_enumeration);
      }
    }
    return v;
  }();
  return c;
}

void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw std::domain_error(std::string(what) + ": n = " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap) +
                            " (override with PARTITION_TOPOLOGY_CAP)");
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative n");
}

}  // namespace ptopo
