#include "ptopo/verify.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "ptopo/complexes.hpp"
#include "ptopo/morse.hpp"
#include "ptopo/posets.hpp"
#include "ptopo/representation.hpp"
#include "ptopo/smith.hpp"

namespace ptopo {

bool VerificationReport::all_pass() const {
  for (const Claim& c : claims)
    if (!c.pass) return false;
  return true;
}

std::vector<KnapsackPartition> knapsack_pairs(int n) {
  std::vector<KnapsackPartition> out;
  // partitions of s = n - m for every m.
  std::function<void(int, int, std::vector<int>&)> rec =
      [&](int remaining, int max_part, std::vector<int>& parts) {
        if (remaining == 0) {
          if (!parts.empty() && is_knapsack(parts))
            out.emplace_back(parts, n - std::accumulate(parts.begin(), parts.end(), 0));
          return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
          parts.push_back(p);
          rec(remaining - p, p, parts);
          parts.pop_back();
        }
      };
  for (int m = 0; m < n; ++m) {
    std::vector<int> parts;
    rec(n - m, n - m, parts);
  }
  return out;
}

namespace {

using Runner = std::function<std::string()>;  // returns witness; empty = pass

struct Pending {
  std::string id;
  std::string statement;
  Runner run;
};

void run_all(std::vector<Pending>& pending, VerificationReport& report, int jobs) {
  size_t count = pending.size();
  std::vector<Claim> claims(count);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= count) break;
      Claim& c = claims[i];
      c.id = pending[i].id;
      c.statement = pending[i].statement;
      auto t0 = std::chrono::steady_clock::now();
      try {
        c.witness = pending[i].run();
        c.pass = c.witness.empty();
      } catch (const std::exception& e) {
        c.pass = false;
        c.witness = std::string("exception: ") + e.what();
      }
      c.wall_time = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (Claim& c : claims) report.claims.push_back(std::move(c));
}

std::string compose_str(const Composition& c) { return c.to_string(); }

std::string kp_str(const KnapsackPartition& kp) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < kp.lambda.size(); ++i) {
    if (i) os << ',';
    os << kp.lambda[i];
  }
  os << ";m=" << kp.m << "}";
  return os.str();
}

SparseMat chains_to_matrix(const std::vector<ChainElement>& chains,
                           const std::vector<Osp>& columns) {
  std::map<Osp, int> col_of;
  for (size_t j = 0; j < columns.size(); ++j) col_of.emplace(columns[j], static_cast<int>(j));
  SparseMat m(static_cast<long long>(chains.size()), static_cast<long long>(columns.size()));
  for (size_t i = 0; i < chains.size(); ++i)
    for (const auto& [f, v] : chains[i].coeff) {
      auto it = col_of.find(f);
      if (it == col_of.end()) throw std::logic_error("chains_to_matrix: face outside complex");
      m.add(static_cast<int>(i), it->second, v);
    }
  return m;
}

long long bell_number(int n) {
  std::vector<std::vector<long long>> tri{{1}};
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> row{tri.back().back()};
    for (long long v : tri.back()) row.push_back(row.back() + v);
    tri.push_back(std::move(row));
  }
  return tri[n][0];
}

// ---------------------------------------------------------------------------

void mobius_suite(std::vector<Pending>& out, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(
        {"mobius.bell.n" + std::to_string(n),
         "the pointed partition lattice on [n] has Bell(n+1) elements and is a lattice",
         [n]() -> std::string {
           PointedPoset pp = build_pointed_partition_lattice(n);
           if (pp.poset.size() != bell_number(n + 1))
             return "size " + std::to_string(pp.poset.size());
           LatticeCheck lc = check_lattice(pp.poset);
           if (!lc.is_lattice)
             return "not a lattice: " + pp.poset.labels[lc.witness->first] + ", " +
                    pp.poset.labels[lc.witness->second];
           return "";
         }});
    out.push_back(
        {"mobius.lattice_iso.n" + std::to_string(n),
         "adjoining n+1 to the pointed block embeds the pointed partition lattice "
         "as the full partition lattice on [n+1], cover for cover",
         [n]() -> std::string {
           PointedPoset pp = build_pointed_partition_lattice(n);
           // Images: partitions of [n+1] encoded as pointed partitions with
           // empty pointed block minus... encode as sorted block lists.
           auto image = [n](const PointedSetPartition& p) {
             std::vector<Mask> blocks = p.blocks;
             blocks.push_back(p.zero | (Mask(1) << n));
             std::sort(blocks.begin(), blocks.end(),
                       [](Mask a, Mask b) { return mask_min(a) < mask_min(b); });
             return blocks;
           };
           // Covers of the partition lattice on [n+1]: merge two blocks.
           std::set<std::pair<std::vector<Mask>, std::vector<Mask>>> expect;
           std::function<void(std::vector<Mask>&, int)> enumerate =
               [&](std::vector<Mask>& blocks, int next) {
                 if (next == n + 2) {
                   for (size_t a = 0; a < blocks.size(); ++a)
                     for (size_t b = a + 1; b < blocks.size(); ++b) {
                       std::vector<Mask> up;
                       for (size_t t = 0; t < blocks.size(); ++t)
                         if (t != a && t != b) up.push_back(blocks[t]);
                       up.push_back(blocks[a] | blocks[b]);
                       std::vector<Mask> lo = blocks;
                       std::sort(lo.begin(), lo.end());
                       std::sort(up.begin(), up.end());
                       expect.insert({lo, up});
                     }
                   return;
                 }
                 Mask bit = Mask(1) << (next - 1);
                 for (size_t b = 0; b < blocks.size(); ++b) {
                   blocks[b] |= bit;
                   enumerate(blocks, next + 1);
                   blocks[b] &= ~bit;
                 }
                 blocks.push_back(bit);
                 enumerate(blocks, next + 1);
                 blocks.pop_back();
               };
           std::vector<Mask> start;
           enumerate(start, 1);
           std::set<std::pair<std::vector<Mask>, std::vector<Mask>>> got;
           for (auto [x, y] : pp.poset.cover_relations()) {
             std::vector<Mask> lo = image(pp.elements[x]);
             std::vector<Mask> up = image(pp.elements[y]);
             std::sort(lo.begin(), lo.end());
             std::sort(up.begin(), up.end());
             got.insert({lo, up});
           }
           if (got != expect) return "cover sets differ";
           return "";
         }});
    out.push_back(
        {"mobius.composition.n" + std::to_string(n),
         "mu of the composition subposet with a bottom adjoined is (-1)^k beta(c)",
         [n]() -> std::string {
           for (const Composition& c : all_pointed_compositions(n)) {
             PointedPoset pp = build_subposet_pi_c(c);
             long long mu = mobius(pp.poset.with_bottom());
             long long expect = (c.k() % 2 == 0 ? 1 : -1) * beta(c);
             if (mu != expect)
               return compose_str(c) + ": mu=" + std::to_string(mu) +
                      " expected " + std::to_string(expect);
           }
           return "";
         }});
    out.push_back(
        {"mobius.hall.n" + std::to_string(n),
         "reduced Euler characteristic of the order complex of the proper part "
         "equals the Mobius value",
         [n]() -> std::string {
           for (const Composition& c : all_pointed_compositions(n)) {
             PointedPoset pp = build_subposet_pi_c(c);
             auto t = pp.poset.top();
             if (!t) return compose_str(c) + ": no top";
             FinitePoset proper = pp.poset.without(*t);
             ChainFaces oc = order_complex(proper);
             // reduced Euler characteristic: sum_{d >= -1} (-1)^d f_d
             long long chi = -1;
             long long sign = 1;
             for (const auto& lvl : oc.by_dim) {
               chi += sign * static_cast<long long>(lvl.size());
               sign = -sign;
             }
             long long mu = mobius(pp.poset.with_bottom());
             if (chi != mu)
               return compose_str(c) + ": chi=" + std::to_string(chi) +
                      " mu=" + std::to_string(mu);
           }
           return "";
         }});
    out.push_back(
        {"mobius.knapsack.n" + std::to_string(n),
         "mu of the knapsack filter with a bottom adjoined is (-1)^(k+1) "
         "sum over V of beta(d), and the filter plus bottom is a lattice",
         [n]() -> std::string {
           for (const KnapsackPartition& kp : knapsack_pairs(n)) {
             PointedPoset pp = build_filter(kp);
             long long mu = mobius(pp.poset.with_bottom());
             long long total = 0;
             for (const Composition& d : kp.v_set()) total += beta(d);
             int k = static_cast<int>(kp.lambda.size()) + 1;
             long long expect = (k % 2 == 0 ? 1 : -1) * total;
             if (mu != expect)
               return kp_str(kp) + ": mu=" + std::to_string(mu) + " expected " +
                      std::to_string(expect);
             LatticeCheck lc = check_lattice(pp.poset.with_bottom());
             if (!lc.is_lattice) return kp_str(kp) + ": filter plus bottom not a lattice";
           }
           return "";
         }});
  }
  int arr_max = std::min(max_n, 3);
  for (int n = 1; n <= arr_max; ++n)
    out.push_back(
        {"mobius.arrangement.n" + std::to_string(n),
         "the intersection lattice of {x_i = x_j} union {x_i = 0} is the "
         "pointed partition lattice",
         [n]() -> std::string {
           PointedPoset arr = build_arrangement_intersection_lattice(n);
           PointedPoset pp = build_pointed_partition_lattice(n);
           if (arr.elements != pp.elements) return "element sets differ";
           if (arr.poset.strict != pp.poset.strict) return "orders differ";
           return "";
         }});
}

void homology_suite(std::vector<Pending>& out, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(
        {"homology.delta_wedge.n" + std::to_string(n),
         "the complex of a composition with positive last part has reduced "
         "homology free of rank beta(c), concentrated in dimension k-2",
         [n]() -> std::string {
           for (const Composition& c : all_positive_compositions(n)) {
             HomologyProfile hp = reduced_homology(build_delta_c(c));
             if (!hp.concentrated_in(c.k() - 2, beta(c)))
               return compose_str(c) + ": " + hp.to_string();
           }
           return "";
         }});
    out.push_back(
        {"homology.delta_cone.n" + std::to_string(n),
         "a trailing zero makes the complex a cone with apex ([n], {}) and "
         "kills all reduced homology",
         [n]() -> std::string {
           for (const Composition& base : all_positive_compositions(n)) {
             std::vector<int> parts = base.parts;
             parts.push_back(0);
             Composition c(std::move(parts));
             OrderedComplex K = build_delta_c(c);
             Osp apex;
             apex.blocks = {(Mask(1) << n) - 1, 0};
             if (!is_cone(K, apex)) return compose_str(c) + ": not a cone";
             HomologyProfile hp = reduced_homology(K);
             for (long long b : hp.betti)
               if (b != 0) return compose_str(c) + ": " + hp.to_string();
             if (!hp.torsion_free()) return compose_str(c) + ": torsion";
           }
           return "";
         }});
    out.push_back(
        {"homology.lambda.n" + std::to_string(n),
         "the knapsack subcomplex is a wedge of sum-over-V-of-beta spheres of "
         "dimension k-1 when m>0, contractible when m=0",
         [n]() -> std::string {
           for (const KnapsackPartition& kp : knapsack_pairs(n)) {
             HomologyProfile hp = reduced_homology(build_lambda(kp));
             if (kp.m == 0) {
               for (long long b : hp.betti)
                 if (b != 0) return kp_str(kp) + ": " + hp.to_string();
               if (!hp.torsion_free()) return kp_str(kp) + ": torsion";
             } else {
               long long total = 0;
               for (const Composition& d : kp.v_set()) total += beta(d);
               int dim = static_cast<int>(kp.lambda.size()) - 1;
               if (!hp.concentrated_in(dim, total))
                 return kp_str(kp) + ": " + hp.to_string() + " expected rank " +
                        std::to_string(total) + " in dim " + std::to_string(dim);
             }
           }
           return "";
         }});
    out.push_back(
        {"homology.quillen_delta.n" + std::to_string(n),
         "the order complex of the composition subposet minus its top has the "
         "Betti profile of the corresponding complex",
         [n]() -> std::string {
           for (const Composition& c : all_pointed_compositions(n)) {
             PointedPoset pp = build_subposet_pi_c(c);
             auto t = pp.poset.top();
             if (!t) return compose_str(c) + ": no top";
             HomologyProfile a = reduced_homology(order_complex(pp.poset.without(*t)));
             HomologyProfile b = reduced_homology(build_delta_c(c));
             for (int d = -1; d <= std::max(a.top_dim, b.top_dim); ++d)
               if (a.betti_dim(d) != b.betti_dim(d))
                 return compose_str(c) + ": dim " + std::to_string(d) + ": " +
                        std::to_string(a.betti_dim(d)) + " vs " +
                        std::to_string(b.betti_dim(d));
             if (!a.torsion_free() || !b.torsion_free())
               return compose_str(c) + ": torsion";
           }
           return "";
         }});
    out.push_back(
        {"homology.quillen_lambda.n" + std::to_string(n),
         "the order complex of the knapsack filter minus its top has the Betti "
         "profile of the knapsack subcomplex",
         [n]() -> std::string {
           for (const KnapsackPartition& kp : knapsack_pairs(n)) {
             PointedPoset pp = build_filter(kp);
             auto t = pp.poset.top();
             if (!t) return kp_str(kp) + ": no top";
             HomologyProfile a = reduced_homology(order_complex(pp.poset.without(*t)));
             HomologyProfile b = reduced_homology(build_lambda(kp));
             for (int d = -1; d <= std::max(a.top_dim, b.top_dim); ++d)
               if (a.betti_dim(d) != b.betti_dim(d))
                 return kp_str(kp) + ": dim " + std::to_string(d) + ": " +
                        std::to_string(a.betti_dim(d)) + " vs " +
                        std::to_string(b.betti_dim(d));
             if (!a.torsion_free() || !b.torsion_free())
               return kp_str(kp) + ": torsion";
           }
           return "";
         }});
    out.push_back(
        {"homology.shelling.n" + std::to_string(n),
         "the lexicographic facet order shells the complex and its spanning "
         "facets are exactly the descent-class facets",
         [n]() -> std::string {
           for (const Composition& c : all_positive_compositions(n)) {
             OrderedComplex K = build_delta_c(c);
             ShellingResult sr = shell(K);
             if (!sr.is_shelling) return compose_str(c) + ": no shelling found";
             std::set<Osp> expect;
             for (const Perm& a : perms_with_descent_composition(c))
               expect.insert(sigma(a, c));
             std::set<Osp> got;
             for (int i : sr.spanning) got.insert(sr.order[i]);
             if (got != expect) return compose_str(c) + ": spanning facets differ";
             if (sr.used_fallback) return compose_str(c) + ": lex order failed (fallback used)";
           }
           return "";
         }});
  }
  int sd_max = std::min(max_n, 4);
  for (int n = 2; n <= sd_max; ++n)
    out.push_back(
        {"homology.subdivision.n" + std::to_string(n),
         "barycentric subdivision preserves the Betti profile",
         [n]() -> std::string {
           for (const Composition& c : all_positive_compositions(n)) {
             OrderedComplex K = build_delta_c(c);
             HomologyProfile a = reduced_homology(K);
             HomologyProfile b = reduced_homology(barycentric_subdivision(K));
             for (int d = -1; d <= std::max(a.top_dim, b.top_dim); ++d)
               if (a.betti_dim(d) != b.betti_dim(d))
                 return compose_str(c) + ": subdivision changed homology";
           }
           return "";
         }});
}

void morse_suite(std::vector<Pending>& out, int max_n) {
  for (int n = 1; n <= max_n; ++n)
    out.push_back(
        {"morse.matching.n" + std::to_string(n),
         "the matching rules give an acyclic involution whose critical cells "
         "are exactly sigma(alpha, epsilon(d)) over d in V, Des(alpha) = d",
         [n]() -> std::string {
           for (const KnapsackPartition& kp : knapsack_pairs(n)) {
             MorseMatching m = build_matching(kp);  // throws if not an involution
             AcyclicityReport ar = verify_acyclic(m);
             if (!ar.acyclic_dfs)
               return kp_str(kp) + ": cycle found: " + ar.cycle_witness.value_or("");
             if (!ar.acyclic_certificate)
               return kp_str(kp) + ": no topological order: " + ar.cycle_witness.value_or("");
             std::vector<Osp> crit = m.critical_cells();
             std::vector<Osp> pred = predicted_critical_cells(kp);
             std::sort(crit.begin(), crit.end());
             std::sort(pred.begin(), pred.end());
             if (crit != pred) {
               std::ostringstream os;
               os << kp_str(kp) << ": " << crit.size() << " critical vs "
                  << pred.size() << " predicted";
               return os.str();
             }
             long long total = 0;
             for (const Composition& d : kp.v_set()) total += beta(d);
             if (static_cast<long long>(crit.size()) != total)
               return kp_str(kp) + ": critical count mismatch";
             for (const Osp& f : crit)
               if (f.num_blocks() != static_cast<int>(kp.lambda.size()) + 1)
                 return kp_str(kp) + ": critical cell of wrong dimension " + f.to_string();
           }
           return "";
         }});
}

void cycles_suite(std::vector<Pending>& out, int max_n, unsigned rng_seed) {
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(
        {"cycles.composition.n" + std::to_string(n),
         "the elements g_alpha are cycles forming a basis of the top homology, "
         "unitriangular against the descent-class facets in the weak order",
         [n]() -> std::string {
           for (const Composition& c : all_positive_compositions(n)) {
             OrderedComplex K = build_delta_c(c);
             std::vector<Perm> labels = perms_with_descent_composition(c);
             std::vector<ChainElement> cycles;
             for (const Perm& a : labels) {
               ChainElement g = cycle_g_alpha(a, c);
               for (const auto& [f, v] : g.coeff)
                 if (!K.contains(f)) return compose_str(c) + ": cycle leaves complex";
               if (!boundary(g).is_zero())
                 return compose_str(c) + ": boundary nonzero for g";
               cycles.push_back(std::move(g));
             }
             long long rank = integer_rank(chains_to_matrix(cycles, K.facets()));
             if (rank != static_cast<long long>(labels.size()))
               return compose_str(c) + ": rank " + std::to_string(rank);
             HomologyProfile hp = reduced_homology(K);
             if (hp.betti_dim(c.k() - 2) != rank)
               return compose_str(c) + ": rank != top Betti";
             for (size_t i = 0; i < labels.size(); ++i)
               for (size_t j = 0; j < labels.size(); ++j) {
                 Osp facet = sigma(labels[j], c);
                 auto it = cycles[i].coeff.find(facet);
                 long long v = it == cycles[i].coeff.end() ? 0 : it->second;
                 if (i == j && v != 1)
                   return compose_str(c) + ": diagonal coefficient " + std::to_string(v);
                 if (v != 0 && !weak_bruhat_leq(labels[j], labels[i]))
                   return compose_str(c) + ": non-triangular entry";
               }
             // Sphere subcomplexes.
             for (const Perm& a : labels) {
               HomologyProfile sp = reduced_homology(build_sigma_alpha(a, c));
               if (!sp.concentrated_in(c.k() - 2, 1))
                 return compose_str(c) + ": sigma-subcomplex not a sphere";
             }
           }
           return "";
         }});
    out.push_back(
        {"cycles.knapsack.n" + std::to_string(n),
         "the elements g_{alpha,d} are cycles forming a basis of the top "
         "homology of the knapsack subcomplex, unitriangular against the "
         "critical cells",
         [n]() -> std::string {
           for (const KnapsackPartition& kp : knapsack_pairs(n)) {
             if (kp.m == 0) continue;
             OrderedComplex K = build_lambda(kp);
             std::vector<std::pair<Perm, Composition>> labels;
             for (const Composition& d : kp.v_set())
               for (const Perm& a : perms_with_descent_composition(d))
                 labels.emplace_back(a, d);
             std::vector<ChainElement> cycles;
             for (const auto& [a, d] : labels) {
               ChainElement g = cycle_g_alpha_d(a, d, kp);
               for (const auto& [f, v] : g.coeff)
                 if (!K.contains(f)) return kp_str(kp) + ": cycle leaves complex";
               if (!boundary(g).is_zero()) return kp_str(kp) + ": boundary nonzero";
               cycles.push_back(std::move(g));
             }
             long long rank = integer_rank(chains_to_matrix(cycles, K.facets()));
             if (rank != static_cast<long long>(labels.size()))
               return kp_str(kp) + ": rank " + std::to_string(rank);
             HomologyProfile hp = reduced_homology(K);
             if (hp.betti_dim(static_cast<int>(kp.lambda.size()) - 1) != rank)
               return kp_str(kp) + ": rank != top Betti";
             for (size_t i = 0; i < labels.size(); ++i)
               for (size_t j = 0; j < labels.size(); ++j) {
                 Osp cell = sigma(labels[j].first, kp.epsilon(labels[j].second));
                 auto it = cycles[i].coeff.find(cell);
                 long long v = it == cycles[i].coeff.end() ? 0 : it->second;
                 if (i == j && v != 1) return kp_str(kp) + ": diagonal coefficient";
                 if (v != 0) {
                   if (!weak_bruhat_leq(labels[j].first, labels[i].first))
                     return kp_str(kp) + ": non-triangular entry";
                   if (labels[j].first == labels[i].first && i != j)
                     return kp_str(kp) + ": same alpha, different d with nonzero entry";
                 }
               }
           }
           return "";
         }});
  }
  out.push_back(
      {"cycles.weak_order_lemma",
       "composing with a column-stabilizer element moves a descent-class "
       "permutation weakly down",
       [max_n, rng_seed]() -> std::string {
         std::mt19937 rng(rng_seed == 0 ? 12345u : rng_seed);
         for (int trial = 0; trial < 200; ++trial) {
           int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(max_n, 6)));
           const auto& classes = descent_classes(n);
           auto it = classes.begin();
           std::advance(it, rng() % classes.size());
           const Composition& c = it->first;
           const Perm& a = it->second[rng() % it->second.size()];
           auto stab = column_stabilizer(c);
           const Perm& gamma = stab[rng() % stab.size()].first;
           if (!weak_bruhat_leq(compose(a, gamma), a))
             return "alpha o gamma not below alpha";
         }
         return "";
       }});
}

void specht_suite(std::vector<Pending>& out, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(
        {"specht.syt.n" + std::to_string(n),
         "standard fillings of the border strip are counted by beta(c), and a "
         "filling is standard exactly when its reading word has descent "
         "composition c",
         [n]() -> std::string {
           for (const Composition& c : all_positive_compositions(n)) {
             BorderStrip bs = border_strip(c);
             if (syt_count(bs) != beta(c)) return compose_str(c) + ": SYT count";
             Perm p = identity_perm(n);
             do {
               bool standard = is_standard(Tableau{bs, p});
               bool descent = descent_composition(p) == c;
               if (standard != descent) return compose_str(c) + ": standard/descent mismatch";
             } while (std::next_permutation(p.begin(), p.end()));
           }
           return "";
         }});
    out.push_back(
        {"specht.polytabloid.n" + std::to_string(n),
         "the polytabloid of the tableau of alpha expands to g_alpha under the "
         "tabloid-facet bijection",
         [n]() -> std::string {
           for (const Composition& c : all_positive_compositions(n))
             for (const Perm& a : perms_with_descent_composition(c)) {
               ChainElement e = polytabloid(tableau_of_permutation(a, c));
               ChainElement g = cycle_g_alpha(a, c);
               if (e.coeff != g.coeff) return compose_str(c) + ": polytabloid != g";
             }
           return "";
         }});
    out.push_back(
        {"specht.closure.n" + std::to_string(n),
         "adjacent transpositions preserve the integer row span of the cycle "
         "basis (rank of the stacked matrix unchanged)",
         [n]() -> std::string {
           for (const Composition& c : all_positive_compositions(n)) {
             OrderedComplex K = build_delta_c(c);
             std::vector<ChainElement> cycles;
             for (const Perm& a : perms_with_descent_composition(c))
               cycles.push_back(cycle_g_alpha(a, c));
             long long base = integer_rank(chains_to_matrix(cycles, K.facets()));
             for (int i = 1; i < n; ++i) {
               Perm s = identity_perm(n);
               std::swap(s[i - 1], s[i]);
               std::vector<ChainElement> stacked = cycles;
               for (const ChainElement& g : cycles) stacked.push_back(act(s, g));
               long long r = integer_rank(chains_to_matrix(stacked, K.facets()));
               if (r != base)
                 return compose_str(c) + ": rank changed under s_" + std::to_string(i);
             }
           }
           return "";
         }});
    out.push_back(
        {"specht.psi.n" + std::to_string(n),
         "the tableau-level refinement map is equivariant and sends "
         "polytabloids to the knapsack cycles",
         [n]() -> std::string {
           for (const KnapsackPartition& kp : knapsack_pairs(n)) {
             if (kp.m == 0) continue;
             for (const Composition& d : kp.v_set()) {
               for (const Perm& a : perms_with_descent_composition(d)) {
                 Tableau t = tableau_of_permutation(a, d);
                 ChainElement lhs = psi_polytabloid(t, kp);
                 ChainElement rhs = cycle_g_alpha_d(a, d, kp);
                 if (lhs.coeff != rhs.coeff)
                   return kp_str(kp) + ": psi(e_t) != g at " + compose_str(d);
               }
               // equivariance over all words and generators
               Perm p = identity_perm(n);
               do {
                 for (int i = 1; i < n; ++i) {
                   Perm s = identity_perm(n);
                   std::swap(s[i - 1], s[i]);
                   ChainElement a1 = psi_tableau([&] {
                     Perm w = p;
                     for (int& v : w) v = s[v - 1];
                     return w;
                   }(), d, kp);
                   ChainElement a2 = act(s, psi_tableau(p, d, kp));
                   if (a1.coeff != a2.coeff) return kp_str(kp) + ": psi not equivariant";
                 }
               } while (std::next_permutation(p.begin(), p.end()));
             }
           }
           return "";
         }});
  }
}

}  // namespace

VerificationReport run_suite(const std::string& suite, int max_n, int jobs,
                             unsigned rng_seed) {
  std::vector<Pending> pending;
  bool all = suite == "all";
  if (all || suite == "mobius") mobius_suite(pending, max_n);
  if (all || suite == "homology") homology_suite(pending, max_n);
  if (all || suite == "morse") morse_suite(pending, max_n);
  if (all || suite == "cycles") cycles_suite(pending, max_n, rng_seed);
  if (all || suite == "specht") specht_suite(pending, max_n);
  if (pending.empty() && !all)
    throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
  VerificationReport report;
  run_all(pending, report, jobs);
  return report;
}

}  // namespace ptopo
