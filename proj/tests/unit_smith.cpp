#include "doctest.h"
#include "ptopo/smith.hpp"

using namespace ptopo;

namespace {
SparseMat dense(const std::vector<std::vector<long long>>& a) {
  SparseMat m(static_cast<long long>(a.size()),
              a.empty() ? 0 : static_cast<long long>(a[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != 0) m.add(static_cast<int>(i), static_cast<int>(j), a[i][j]);
  return m;
}
}  // namespace

TEST_CASE("smith normal form of fixed matrices") {
  SUBCASE("empty") {
    SnfResult r = smith_normal_form(SparseMat(0, 0));
    CHECK(r.rank == 0);
    CHECK(r.torsion.empty());
  }
  SUBCASE("identity") {
    SnfResult r = smith_normal_form(dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(r.rank == 3);
    CHECK(r.torsion.empty());
  }
  SUBCASE("diag(2,3) has invariant factors 1,6") {
    SnfResult r = smith_normal_form(dense({{2, 0}, {0, 3}}));
    CHECK(r.rank == 2);
    REQUIRE(r.torsion.size() == 1);
    CHECK(r.torsion[0] == 6);
  }
  SUBCASE("classic 3x3 example") {
    // SNF of [[2,4,4],[-6,6,12],[10,4,16]] is diag(2,2,156).
    SnfResult r = smith_normal_form(dense({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
    CHECK(r.rank == 3);
    REQUIRE(r.torsion.size() == 3);
    CHECK(r.torsion[0] == 2);
    CHECK(r.torsion[1] == 2);
    CHECK(r.torsion[2] == 156);
  }
  SUBCASE("rank deficiency") {
    SnfResult r = smith_normal_form(dense({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}}));
    CHECK(r.rank == 2);
    CHECK(r.torsion.empty());
  }
  SUBCASE("single row") {
    SnfResult r = smith_normal_form(dense({{4, 6, 10}}));
    CHECK(r.rank == 1);
    REQUIRE(r.torsion.size() == 1);
    CHECK(r.torsion[0] == 2);  // gcd
  }
}

TEST_CASE("rank agrees with fraction-free elimination on random matrices") {
  // Deterministic pseudo-random small integer matrices; compare against a
  // naive rational-free rank via Bareiss on cpp_int.
  unsigned state = 42;
  auto next = [&state]() {
    state = state * 1103515245u + 12345u;
    return static_cast<int>((state >> 16) % 7) - 3;
  };
  for (int trial = 0; trial < 30; ++trial) {
    int nr = 1 + static_cast<int>(state % 5u);
    int nc = 1 + static_cast<int>((state >> 3) % 5u);
    std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc));
    SparseMat m(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) {
        int v = next();
        a[i][j] = v;
        if (v != 0) m.add(i, j, v);
      }
    // Gaussian elimination over the rationals, done with exact integers.
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
      int piv = -1;
      for (int i = rank; i < nr; ++i)
        if (a[i][col] != 0) { piv = i; break; }
      if (piv < 0) continue;
      std::swap(a[rank], a[piv]);
      for (int i = rank + 1; i < nr; ++i) {
        if (a[i][col] == 0) continue;
        Int f1 = a[rank][col], f2 = a[i][col];
        for (int j = col; j < nc; ++j) a[i][j] = a[i][j] * f1 - a[rank][j] * f2;
      }
      ++rank;
    }
    CHECK(integer_rank(std::move(m)) == rank);
  }
}
