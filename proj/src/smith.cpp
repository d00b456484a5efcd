#include "ptopo/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace ptopo {

void SparseMat::add(int r, int c, const Int& v) {
  if (r < 0 || r >= nrows || c < 0 || c >= ncols)
    throw std::out_of_range("SparseMat::add");
  if (v == 0) return;
  Int& slot = rows[r][c];
  slot += v;
  if (slot == 0) rows[r].erase(c);
}

namespace {

// row[dst] -= q * row[src], maintaining the column index.
void row_axpy(std::vector<std::map<int, Int>>& rows,
              std::vector<std::set<int>>& col_rows, int dst, int src,
              const Int& q) {
  if (q == 0) return;
  for (const auto& [c, v] : rows[src]) {
    auto it = rows[dst].find(c);
    if (it == rows[dst].end()) {
      rows[dst].emplace(c, -q * v);
      col_rows[c].insert(dst);
    } else {
      it->second -= q * v;
      if (it->second == 0) {
        rows[dst].erase(it);
        col_rows[c].erase(dst);
      }
    }
  }
}

}  // namespace

SnfResult smith_normal_form(SparseMat m) {
  auto& rows = m.rows;
  std::vector<std::set<int>> col_rows(m.ncols);
  for (int r = 0; r < m.nrows; ++r)
    for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);

  std::vector<Int> diag;
  std::vector<char> col_active(m.ncols, 1);
  std::vector<int> active_cols;
  active_cols.reserve(m.ncols);
  for (int c = 0; c < m.ncols; ++c)
    if (!col_rows[c].empty()) active_cols.push_back(c);

  while (true) {
    // Pick the active column with the fewest nonzeros; inside it the entry
    // with smallest absolute value (preferring the sparsest row on ties).
    int best_col = -1;
    size_t best_size = 0;
    {
      size_t w = 0;
      for (size_t i = 0; i < active_cols.size(); ++i) {
        int c = active_cols[i];
        if (!col_active[c] || col_rows[c].empty()) continue;
        active_cols[w++] = c;
        if (best_col == -1 || col_rows[c].size() < best_size) {
          best_col = c;
          best_size = col_rows[c].size();
          if (best_size == 1) {
            // keep compacting the rest lazily
          }
        }
      }
      active_cols.resize(w);
    }
    if (best_col == -1) break;

    int pr = -1;
    int pc = best_col;
    Int pv = 0;
    size_t pr_size = 0;
    for (int r : col_rows[pc]) {
      const Int& v = rows[r].at(pc);
      Int av = abs(v);
      if (pr == -1 || av < abs(pv) ||
          (av == abs(pv) && rows[r].size() < pr_size)) {
        pr = r;
        pv = v;
        pr_size = rows[r].size();
      }
    }

    // Reduce until the pivot divides everything in its row and column.
    bool stable = false;
    while (!stable) {
      stable = true;
      // Column entries not divisible by the pivot: a row operation leaves a
      // smaller remainder which becomes the new pivot.
      for (int r : std::vector<int>(col_rows[pc].begin(), col_rows[pc].end())) {
        if (r == pr) continue;
        Int v = rows[r].at(pc);
        if (v % pv != 0) {
          Int q = v / pv;  // truncated
          row_axpy(rows, col_rows, r, pr, q);
          pr = r;
          pv = rows[r].at(pc);
          stable = false;
          break;
        }
      }
      if (!stable) continue;
      // Row entries not divisible by the pivot: a column operation inside
      // row pr (the column op touches other rows too, via the pivot column).
      for (const auto& [c, v] : rows[pr]) {
        if (c == pc) continue;
        if (v % pv != 0) {
          Int q = v / pv;
          // col_c -= q * col_pc
          for (int r : std::vector<int>(col_rows[pc].begin(), col_rows[pc].end())) {
            Int delta = -q * rows[r].at(pc);
            auto it = rows[r].find(c);
            if (it == rows[r].end()) {
              rows[r].emplace(c, delta);
              col_rows[c].insert(r);
            } else {
              it->second += delta;
              if (it->second == 0) {
                rows[r].erase(it);
                col_rows[c].erase(r);
              }
            }
          }
          // New pivot: the remainder now sitting at (pr, c).
          pc = c;
          pv = rows[pr].at(pc);
          stable = false;
          break;
        }
      }
    }

    // Clear the pivot column with exact row operations.
    for (int r : std::vector<int>(col_rows[pc].begin(), col_rows[pc].end())) {
      if (r == pr) continue;
      Int q = rows[r].at(pc) / pv;
      row_axpy(rows, col_rows, r, pr, q);
    }
    // The remaining entries of row pr are divisible by pv; clearing them by
    // column operations only touches row pr, so drop the row and column.
    for (const auto& [c, v] : rows[pr]) col_rows[c].erase(pr);
    rows[pr].clear();
    col_active[pc] = 0;
    diag.push_back(abs(pv));
  }

  // Repair the divisibility chain: diag(a, b) is equivalent to
  // diag(gcd(a, b), lcm(a, b)).
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < diag.size(); ++i)
      for (size_t j = i + 1; j < diag.size(); ++j) {
        if (diag[j] % diag[i] != 0) {
          Int g = gcd(diag[i], diag[j]);
          Int l = diag[i] / g * diag[j];
          diag[i] = g;
          diag[j] = l;
          changed = true;
        }
      }
  }
  std::sort(diag.begin(), diag.end());

  SnfResult res;
  res.rank = static_cast<long long>(diag.size());
  for (const Int& d : diag)
    if (d > 1) res.torsion.push_back(d);
  return res;
}

}  // namespace ptopo
