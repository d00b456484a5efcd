#include <numeric>

#include "doctest.h"
#include "ptopo/combinatorics.hpp"
#include "ptopo/verify.hpp"

using namespace ptopo;

TEST_CASE("descent compositions") {
  CHECK(descent_composition({5, 7, 4, 10, 8, 1, 3, 6, 2, 9}) ==
        Composition({2, 2, 1, 3, 2}));
  CHECK(descent_composition({1, 2, 3, 4}) == Composition({4}));
  CHECK(descent_composition({3, 2, 1}) == Composition({1, 1, 1}));
  CHECK(descent_composition({1}) == Composition({1}));
}

TEST_CASE("beta values") {
  CHECK(beta(Composition({1, 2, 1})) == 5);
  CHECK(beta(Composition({2, 1, 1})) == 3);
  CHECK(beta(Composition({3, 1})) == 3);
  CHECK(beta(Composition({2, 1})) == 2);
  CHECK(beta(Composition({2, 2, 1})) == 16);
  CHECK(beta(Composition({4})) == 1);
  CHECK(beta(Composition({1, 1, 0})) == 0);
  CHECK(beta(Composition({0})) == 1);
  CHECK(beta(Composition({3, 0})) == 0);
}

TEST_CASE("beta sums to n! over compositions with positive last part") {
  for (int n = 1; n <= 6; ++n) {
    long long total = 0;
    for (const Composition& c : all_positive_compositions(n)) total += beta(c);
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(total == fact);
  }
}

TEST_CASE("descent classes partition the symmetric group") {
  for (int n = 1; n <= 5; ++n) {
    long long total = 0;
    for (const auto& [c, perms] : descent_classes(n)) {
      CHECK(static_cast<long long>(perms.size()) == beta(c));
      for (const Perm& a : perms) CHECK(descent_composition(a) == c);
      total += static_cast<long long>(perms.size());
    }
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(total == fact);
  }
}

TEST_CASE("composition order") {
  CHECK(composition_leq(Composition({1, 2, 1}), Composition({3, 1})));
  CHECK(composition_leq(Composition({2, 1, 1}), Composition({2, 1, 1})));
  CHECK(!composition_leq(Composition({2, 1, 1}), Composition({1, 3})));
  CHECK(composition_leq(Composition({1, 1, 1, 0}), Composition({3, 0})));
  CHECK(!composition_leq(Composition({1, 1, 2}), Composition({2, 2, 0})));
  // The interval from (1,...,1) to (n) is a Boolean algebra: element count.
  for (int n = 1; n <= 6; ++n) {
    long long cnt = 0;
    for (const Composition& c : all_positive_compositions(n))
      if (composition_leq(Composition(std::vector<int>(n, 1)), c)) ++cnt;
    CHECK(cnt == (1LL << (n - 1)));
  }
}

TEST_CASE("complement composition") {
  CHECK(complement_composition(Composition({1, 2, 1})) == Composition({2, 2}));
  CHECK(complement_composition(Composition({4})) ==
        Composition({1, 1, 1, 1}));
  for (int n = 1; n <= 7; ++n)
    for (const Composition& c : all_positive_compositions(n)) {
      Composition cc = complement_composition(c);
      CHECK(cc.k() == n - c.k() + 1);
      CHECK(complement_composition(cc) == c);
    }
}

TEST_CASE("interval decomposition covers positions once per side") {
  for (int n = 1; n <= 7; ++n)
    for (const Composition& c : all_positive_compositions(n)) {
      IntervalDecomposition id = interval_decomposition(c);
      CHECK(static_cast<int>(id.rows.size()) == c.k());
      int pos = 1;
      for (auto [a, b] : id.rows) {
        CHECK(a == pos);
        pos = b + 1;
      }
      CHECK(pos == n + 1);
      pos = 1;
      for (auto [a, b] : id.cols) {
        CHECK(a == pos);
        pos = b + 1;
      }
      CHECK(pos == n + 1);
      // Every row interval meets every column interval in at most one point.
      for (auto [a1, b1] : id.rows)
        for (auto [a2, b2] : id.cols) {
          int lo = std::max(a1, a2), hi = std::min(b1, b2);
          CHECK(hi - lo <= 0);
        }
    }
}

TEST_CASE("weak order on the symmetric group") {
  CHECK(weak_bruhat_leq({1, 2, 3}, {1, 3, 2}));
  CHECK(weak_bruhat_leq({1, 3, 2}, {3, 1, 2}));
  CHECK(!weak_bruhat_leq({2, 1, 3}, {1, 3, 2}));
  for (int n = 1; n <= 4; ++n) {
    Perm id = identity_perm(n);
    Perm w0(n);
    for (int i = 0; i < n; ++i) w0[i] = n - i;
    Perm p = id;
    do {
      CHECK(weak_bruhat_leq(id, p));
      CHECK(weak_bruhat_leq(p, w0));
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("knapsack recognition") {
  CHECK(is_knapsack({1}));
  CHECK(is_knapsack({1, 1}));
  CHECK(is_knapsack({2, 1}));
  CHECK(is_knapsack({2, 2}));
  CHECK(is_knapsack({7, 3, 1, 1}));
  CHECK(is_knapsack({4, 3, 2}));
  CHECK(!is_knapsack({2, 1, 1}));  // 2 = 1 + 1
  CHECK(!is_knapsack({3, 2, 1}));  // 3 = 2 + 1
  CHECK(!is_knapsack({5, 3, 2}));  // 5 = 3 + 2
}

TEST_CASE("knapsack tables for {2,1} with m = 1") {
  KnapsackPartition kp({2, 1}, 1);
  CHECK(kp.n == 4);
  CHECK(kp.kappa(1) == 1);
  CHECK(kp.kappa(2) == 2);
  CHECK(kp.kappa(3) == 1);
  CHECK(!kp.in_domain(0));  // D holds nonzero sums only
  CHECK(!kp.in_domain(4));

  std::vector<Composition> v = kp.v_set();
  std::vector<Composition> expect = {Composition({1, 2, 1}),
                                     Composition({2, 1, 1}),
                                     Composition({3, 1})};
  std::sort(v.begin(), v.end());
  std::sort(expect.begin(), expect.end());
  CHECK(v == expect);

  CHECK(kp.epsilon(Composition({3, 1})) == Composition({2, 1, 1}));
  CHECK(kp.epsilon(Composition({1, 2, 1})) == Composition({1, 2, 1}));

  auto w = kp.w_set(Composition({3, 1}));
  std::map<Composition, int> wm(w.begin(), w.end());
  CHECK(wm.size() == 2);
  CHECK(wm.at(Composition({2, 1, 1})) == 1);
  CHECK(wm.at(Composition({1, 2, 1})) == -1);
}

TEST_CASE("distinct-value constraint on V") {
  // {1,1,3,7} with m: a part of a V-member may use 1+3+7 but never 1+1.
  KnapsackPartition kp({7, 3, 1, 1}, 1);
  CHECK(!kp.is_valid_v_member(Composition({2, 10, 1})));
  CHECK(kp.is_valid_v_member(Composition({1, 1, 3, 7, 1})));
  CHECK(kp.is_valid_v_member(Composition({1, 11, 1})));
  // {1,1}: V must stay at the single finest composition.
  KnapsackPartition kp2({1, 1}, 1);
  std::vector<Composition> v = kp2.v_set();
  CHECK(v == std::vector<Composition>{Composition({1, 1, 1})});
}

TEST_CASE("epsilon has the type of the pair and beta transports") {
  for (int n = 1; n <= 5; ++n)
    for (const KnapsackPartition& kp : knapsack_pairs(n)) {
      for (const Composition& d : kp.v_set()) {
        Composition e = kp.epsilon(d);
        std::vector<int> parts(e.parts.begin(), e.parts.end() - 1);
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        CHECK(parts == kp.lambda);
        CHECK(e.parts.back() == kp.m);
      }
    }
}
