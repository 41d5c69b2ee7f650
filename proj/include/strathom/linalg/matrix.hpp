#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strathom/linalg/scalar.hpp"

namespace strathom::linalg {

/// Dense row-major matrix over a single Field. Vectors are 1×n rows; a linear
/// map V → W is stored as a dim V × dim W matrix acting on row vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  Matrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(const Field& field, std::size_t n);
  /// Integer entries, convenient for fixtures and tests.
  static Matrix from_ints(const Field& field, const std::vector<std::vector<long>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix row(std::size_t r) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix scaled(const Scalar& s) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace strathom::linalg
