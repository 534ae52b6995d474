#include "etlib/linalg.hpp"

namespace etlib {

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::optional<RatVec> solve(RatMat a, RatVec b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "solve: rows vs rhs");
  size_t cols = a.empty() ? 0 : a[0].size();
  for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
  RatVec x(cols, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

std::vector<RatVec> kernel(RatMat a) {
  if (a.empty()) return {};
  size_t cols = a[0].size();
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(cols, 0);
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

int affine_rank(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  RatMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
  if (diffs.empty()) return 0;
  return rank(std::move(diffs));
}

}  // namespace etlib
