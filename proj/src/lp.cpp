#include "etlib/lp.hpp"

#include <algorithm>

namespace etlib {

namespace {

// Dense tableau: rows 0..m-1 hold constraints, the last row holds reduced
// costs; column n+m is the right-hand side / objective value.  basis[i] is
// the variable owning row i.  Bland's rule throughout, so cycling is
// impossible and exact arithmetic keeps everything rational.
struct Tableau {
  RatMat t;
  std::vector<int> basis;
  int m, ncols;

  void pivot(int row, int col) {
    Rat p = t[row][col];
    for (auto& v : t[row]) v /= p;
    for (int i = 0; i <= m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (int j = 0; j <= ncols; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Returns false when no positive reduced cost remains (optimal), throws
  // via caller when the entering column is unbounded.
  enum class Step { Optimal, Unbounded, Pivoted };
  Step step(int limit_cols) {
    int col = -1;
    for (int j = 0; j < limit_cols; ++j) {
      if (t[m][j] > 0) { col = j; break; }
    }
    if (col < 0) return Step::Optimal;
    int row = -1;
    Rat best = 0;
    for (int i = 0; i < m; ++i) {
      if (t[i][col] <= 0) continue;
      Rat ratio = t[i][ncols] / t[i][col];
      if (row < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[row])) {
        row = i;
        best = ratio;
      }
    }
    if (row < 0) return Step::Unbounded;
    pivot(row, col);
    return Step::Pivoted;
  }
};

}  // namespace

LpResult lp_maximize(RatMat a, RatVec b, RatVec c) {
  int m = static_cast<int>(a.size());
  int n = static_cast<int>(c.size());
  for (auto& row : a) {
    if (static_cast<int>(row.size()) != n)
      throw Error("DimensionMismatch", "lp constraint width");
  }
  if (static_cast<int>(b.size()) != m)
    throw Error("DimensionMismatch", "lp right-hand side");

  for (int i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  }

  // Phase 1: minimize the sum of artificial variables n..n+m-1.
  Tableau tab;
  tab.m = m;
  tab.ncols = n + m;
  tab.t.assign(m + 1, RatVec(n + m + 1, 0));
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tab.t[i][j] = a[i][j];
    tab.t[i][n + i] = 1;
    tab.t[i][n + m] = b[i];
    tab.basis[i] = n + i;
  }
  // Maximizing -(sum of artificials); price out the artificial basis.
  for (int j = 0; j < n; ++j) {
    Rat s = 0;
    for (int i = 0; i < m; ++i) s += a[i][j];
    tab.t[m][j] = s;
  }
  Rat rhs_sum = 0;
  for (int i = 0; i < m; ++i) rhs_sum += b[i];
  tab.t[m][n + m] = rhs_sum;

  while (tab.step(n + m) == Tableau::Step::Pivoted) {}
  if (tab.t[m][n + m] != 0) return {LpResult::Status::Infeasible, 0, {}};

  // Kick leftover artificials out of the basis; an all-zero row is a
  // redundant constraint and can be dropped.
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j) {
      if (tab.t[i][j] != 0) { col = j; break; }
    }
    if (col >= 0) tab.pivot(i, col);
  }
  std::vector<int> keep;
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) keep.push_back(i);
  }
  if (static_cast<int>(keep.size()) < m) {
    RatMat nt;
    std::vector<int> nb;
    for (int i : keep) {
      nt.push_back(std::move(tab.t[i]));
      nb.push_back(tab.basis[i]);
    }
    nt.push_back(std::move(tab.t[m]));
    tab.t = std::move(nt);
    tab.basis = std::move(nb);
    tab.m = m = static_cast<int>(keep.size());
  }

  // Phase 2: restore the real objective, priced out over the basis.
  for (int j = 0; j < tab.ncols; ++j) tab.t[m][j] = (j < n) ? c[j] : Rat(0);
  tab.t[m][tab.ncols] = 0;
  for (int i = 0; i < m; ++i) {
    Rat f = tab.t[m][tab.basis[i]];
    if (f == 0) continue;
    for (int j = 0; j <= tab.ncols; ++j) tab.t[m][j] -= f * tab.t[i][j];
  }

  for (;;) {
    auto s = tab.step(n);  // artificial columns stay out in phase 2
    if (s == Tableau::Step::Unbounded)
      return {LpResult::Status::Unbounded, 0, {}};
    if (s == Tableau::Step::Optimal) break;
  }

  LpResult res;
  res.status = LpResult::Status::Optimal;
  res.value = -tab.t[m][tab.ncols];
  res.x.assign(n, 0);
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][tab.ncols];
  }
  return res;
}

}  // namespace etlib
