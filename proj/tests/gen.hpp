#pragma once

#include <random>

#include "strathom/linalg/matrix.hpp"

namespace gen {

using strathom::linalg::Field;
using strathom::linalg::Matrix;
using strathom::linalg::Scalar;

inline Scalar small_scalar(std::mt19937_64& rng, const Field& f, long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  return Scalar(f, d(rng));
}

/// Random matrix whose rank is often deficient: with probability 1/3 a row
/// copies a combination of earlier ones.
inline Matrix matrix(std::mt19937_64& rng, const Field& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  std::uniform_int_distribution<int> coin(0, 2);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i > 0 && coin(rng) == 0) {
      for (std::size_t k = 0; k < i; ++k) {
        const Scalar c = small_scalar(rng, f, -2, 2);
        for (std::size_t j = 0; j < cols; ++j) m(i, j) += c * m(k, j);
      }
    } else {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_scalar(rng, f);
    }
  }
  return m;
}

inline Field field(std::mt19937_64& rng) {
  static const Field fields[] = {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(101)};
  std::uniform_int_distribution<int> d(0, 3);
  return fields[d(rng)];
}

}  // namespace gen
