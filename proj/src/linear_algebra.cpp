#include "noct/linear_algebra.hpp"

#include <utility>

namespace noct {

std::optional<Vector> solve(Matrix a, Vector b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::size_t rank(Matrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t row = r + 1; row < rows; ++row) {
      if (a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[r][col];
      for (std::size_t k = col; k < cols; ++k) a[row][k] -= factor * a[r][k];
    }
    ++r;
  }
  return r;
}

Inertia inertia(Matrix m) {
  const std::size_t n = m.size();
  Inertia result;
  // Symmetric elimination: every step applies the same operation to rows and
  // columns, so the diagonal signs are those of a congruent diagonal form.
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] == 0) {
      std::size_t j = i + 1;
      while (j < n && m[i][j] == 0) ++j;
      if (j == n) {
        ++result.zero;
        continue;
      }
      // Row/column i += row/column j makes the pivot nonzero unless it cancels;
      // in that case use the difference instead.
      const Rational s = (m[j][j] + 2 * m[i][j] == 0) ? Rational(-1) : Rational(1);
      for (std::size_t k = 0; k < n; ++k) m[i][k] += s * m[j][k];
      for (std::size_t k = 0; k < n; ++k) m[k][i] += s * m[k][j];
    }
    for (std::size_t r = i + 1; r < n; ++r) {
      if (m[r][i] == 0) continue;
      const Rational factor = m[r][i] / m[i][i];
      for (std::size_t k = 0; k < n; ++k) m[r][k] -= factor * m[i][k];
      for (std::size_t k = 0; k < n; ++k) m[k][r] -= factor * m[k][i];
    }
    if (m[i][i] > 0) {
      ++result.positive;
    } else {
      ++result.negative;
    }
  }
  return result;
}

}  // namespace noct
