#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

namespace ptopo {

using Int = boost::multiprecision::cpp_int;

struct SparseMat {
  long long nrows = 0, ncols = 0;
  std::vector<std::map<int, Int>> rows;

  SparseMat() = default;
  SparseMat(long long r, long long c) : nrows(r), ncols(c), rows(r) {}
  void add(int r, int c, const Int& v);
};

struct SnfResult {
  long long rank = 0;
  // Invariant factors greater than 1, in divisibility order.
  std::vector<Int> torsion;
};

// Exact integer Smith normal form (rank + nontrivial invariant factors),
// smallest-pivot elimination with arbitrary-precision entries.
SnfResult smith_normal_form(SparseMat m);

inline long long integer_rank(SparseMat m) { return smith_normal_form(std::move(m)).rank; }

}  // namespace ptopo
