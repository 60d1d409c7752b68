#include "core/linalg.hpp"

namespace jbv {

int rank(Matrix m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  int r = 0;
  size_t prow = 0;
  for (size_t c = 0; c < cols && prow < rows; ++c) {
    size_t piv = prow;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[prow]);
    for (size_t i = prow + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[prow][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[prow][j];
    }
    ++prow;
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  Matrix m = a;
  for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);

  std::vector<int> pivot_col;
  size_t prow = 0;
  for (size_t c = 0; c < cols && prow < rows; ++c) {
    size_t piv = prow;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[prow]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == prow || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[prow][c];
      for (size_t j = c; j <= cols; ++j) m[i][j] -= f * m[prow][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++prow;
  }
  for (size_t i = prow; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;

  std::vector<Rational> x(cols, Rational(0));
  for (size_t r = 0; r < pivot_col.size(); ++r)
    x[static_cast<size_t>(pivot_col[r])] = m[r][cols] / m[r][static_cast<size_t>(pivot_col[r])];
  return x;
}

bool composes_to_zero(const Matrix& next, const Matrix& cur) {
  if (next.empty() || cur.empty()) return true;
  const size_t n = next.size();
  const size_t k = next[0].size();
  if (k != cur.size()) return false;
  const size_t c = cur[0].size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < c; ++j) {
      Rational acc(0);
      for (size_t t = 0; t < k; ++t) acc += next[i][t] * cur[t][j];
      if (acc != 0) return false;
    }
  }
  return true;
}

} // namespace jbv
