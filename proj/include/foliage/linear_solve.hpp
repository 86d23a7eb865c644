#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "foliage/gaussian_rational.hpp"

namespace foliage {

using Matrix = std::vector<std::vector<GaussianRational>>;

struct LinearSolution {
  bool consistent = false;
  /// Particular solution with every free (non-pivot) unknown set to zero.
  std::vector<GaussianRational> x;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::vector<std::size_t> pivot_columns;
  /// Original index of the first row reduced to 0 = nonzero.
  std::optional<std::size_t> inconsistent_row;
};

/// Exact Gauss-Jordan elimination of A x = b. Pivots are chosen column by
/// column, left to right, taking the first remaining row with a nonzero entry,
/// so the result depends only on the ordering of rows and columns.
LinearSolution solve_exact(Matrix a, std::vector<GaussianRational> b);

/// Exact determinant of a square matrix.
GaussianRational determinant(Matrix a);

}  // namespace foliage
