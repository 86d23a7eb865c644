#include "foliage/linear_solve.hpp"

#include <numeric>
#include <stdexcept>

namespace foliage {

LinearSolution solve_exact(Matrix a, std::vector<GaussianRational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("right-hand side length mismatch");
  const std::size_t cols = rows ? a.front().size() : 0;
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");

  // order[k] is the original index of the row currently in slot k.
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);

  LinearSolution out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows; ++col) {
    std::size_t pivot = next;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[next]);
    std::swap(b[pivot], b[next]);
    std::swap(order[pivot], order[next]);

    GaussianRational inv = a[next][col].inverse();
    for (std::size_t c = col; c < cols; ++c)
      if (!a[next][c].is_zero()) a[next][c] *= inv;
    b[next] *= inv;

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next || a[r][col].is_zero()) continue;
      GaussianRational factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c)
        if (!a[next][c].is_zero()) a[r][c] -= factor * a[next][c];
      b[r] -= factor * b[next];
    }
    out.pivot_columns.push_back(col);
    ++next;
  }
  out.rank = next;
  out.kernel_dim = cols - out.rank;

  // Rows below the pivots are all-zero on the left; a nonzero right side is
  // an inconsistency. Report the smallest original row index among them.
  for (std::size_t r = next; r < rows; ++r)
    if (!b[r].is_zero() && (!out.inconsistent_row || order[r] < *out.inconsistent_row)) out.inconsistent_row = order[r];
  out.consistent = !out.inconsistent_row.has_value();
  if (!out.consistent) return out;

  out.x.assign(cols, GaussianRational());
  for (std::size_t k = 0; k < out.rank; ++k) out.x[out.pivot_columns[k]] = b[k];
  return out;
}

GaussianRational determinant(Matrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  GaussianRational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return GaussianRational();
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    GaussianRational inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      GaussianRational factor = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

}  // namespace foliage
