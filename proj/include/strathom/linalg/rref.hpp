#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "strathom/linalg/matrix.hpp"

namespace strathom::linalg {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  /// Invertible, transform * m == reduced.
  Matrix transform;

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination. Row updates for a pivot are independent and run
/// under OpenMP once the matrix is large enough; the result is identical to
/// rref_serial bit for bit.
RrefResult rref(const Matrix& m);

/// Single-threaded reference kernel, kept for cross-checking and benchmarks.
RrefResult rref_serial(const Matrix& m);

/// Same elimination without tracking the transform.
Matrix rref_only(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m);

/// Columns span the right kernel {x : m x = 0}; column count is cols - rank.
Matrix kernel_basis(const Matrix& m);

/// Some X with m X = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& b);

/// Inverse of a square matrix, nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Rows above which the parallel elimination kicks in (rows*cols).
inline constexpr std::size_t kParallelEliminationThreshold = 4096;

}  // namespace strathom::linalg
