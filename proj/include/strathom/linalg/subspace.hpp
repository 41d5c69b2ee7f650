#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "strathom/linalg/matrix.hpp"

namespace strathom::linalg {

/// A subspace of k^n held as reduced row-echelon rows. Gives canonical
/// membership tests and quotient coordinates (the entries of a reduced vector
/// at the non-pivot columns).
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& field, std::size_t ambient);
  /// Span of the rows of `generators`.
  explicit Subspace(const Matrix& generators);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Non-pivot columns; their unit vectors span a complement.
  std::vector<std::size_t> complement_columns() const;

  /// Residual of v (1×n) after eliminating the pivot columns.
  Matrix reduce(const Matrix& v) const;
  bool contains(const Matrix& v) const { return reduce(v).is_zero(); }
  bool contains_all(const Matrix& rows) const;
  /// Quotient coordinates of every row of `rows` (rows × (n - dim)).
  Matrix quotient_coordinates(const Matrix& rows) const;
  /// X with X * basis() == rows, or nullopt if some row is outside.
  std::optional<Matrix> coordinates(const Matrix& rows) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Rows spanning {x : x m = 0}.
Matrix left_kernel(const Matrix& m);

}  // namespace strathom::linalg
