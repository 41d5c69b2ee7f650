#include "strathom/linalg/rref.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace strathom::linalg {

namespace {

// Eliminates in place on `a` (rows x width); pivots are searched only in the
// first `search_cols` columns. Returns pivot columns.
template <bool Parallel>
std::vector<std::size_t> eliminate(std::vector<Scalar>& a, std::size_t rows, std::size_t width,
                                   std::size_t search_cols) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  const bool big = rows * width >= kParallelEliminationThreshold;
  for (std::size_t c = 0; c < search_cols && prow < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t r = prow; r < rows; ++r) {
      if (!a[r * width + c].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != prow) {
      for (std::size_t j = 0; j < width; ++j) std::swap(a[sel * width + j], a[prow * width + j]);
    }
    const Scalar inv = a[prow * width + c].inverse();
    for (std::size_t j = c; j < width; ++j) a[prow * width + j] *= inv;

    const Scalar* pivot_row = &a[prow * width];
    const auto n = static_cast<long long>(rows);
    auto update = [&](long long rr) {
      const auto r = static_cast<std::size_t>(rr);
      if (r == prow) return;
      Scalar* row = &a[r * width];
      if (row[c].is_zero()) return;
      const Scalar factor = row[c];
      for (std::size_t j = c; j < width; ++j) {
        if (!pivot_row[j].is_zero()) row[j].sub_mul(factor, pivot_row[j]);
      }
    };
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if (big)
      for (long long r = 0; r < n; ++r) update(r);
    } else {
      (void)big;
      for (long long r = 0; r < n; ++r) update(r);
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

template <bool Parallel>
RrefResult rref_impl(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t width = cols + rows;
  std::vector<Scalar> a(rows * width, Scalar::zero(m.field()));
  const Scalar one = Scalar::one(m.field());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i * width + j] = m(i, j);
    a[i * width + cols + i] = one;
  }
  RrefResult res;
  res.pivot_columns = eliminate<Parallel>(a, rows, width, cols);
  res.reduced = Matrix(m.field(), rows, cols);
  res.transform = Matrix(m.field(), rows, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) res.reduced(i, j) = std::move(a[i * width + j]);
    for (std::size_t j = 0; j < rows; ++j) res.transform(i, j) = std::move(a[i * width + cols + j]);
  }
  return res;
}

}  // namespace

RrefResult rref(const Matrix& m) { return rref_impl<true>(m); }

RrefResult rref_serial(const Matrix& m) { return rref_impl<false>(m); }

Matrix rref_only(const Matrix& m, std::vector<std::size_t>* pivots) {
  std::vector<Scalar> a = m.entries();
  auto piv = eliminate<true>(a, m.rows(), m.cols(), m.cols());
  if (pivots) *pivots = std::move(piv);
  return Matrix(m.field(), m.rows(), m.cols(), std::move(a));
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref_only(m, &piv);
  return piv.size();
}

Matrix kernel_basis(const Matrix& m) {
  std::vector<std::size_t> piv;
  const Matrix r = rref_only(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix k(m.field(), m.cols(), free.size());
  const Scalar one = Scalar::one(m.field());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = one;
    for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], f) = -r(i, free[f]);
  }
  return k;
}

std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "solve_linear: row counts differ");
  std::vector<std::size_t> piv;
  const Matrix r = rref_only(hstack(m, b), &piv);
  for (auto c : piv) {
    if (c >= m.cols()) return std::nullopt;
  }
  Matrix x(m.field(), m.cols(), b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[i], j) = r(i, m.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
  auto x = solve_linear(m, Matrix::identity(m.field(), m.rows()));
  if (!x || m * *x != Matrix::identity(m.field(), m.rows())) return std::nullopt;
  return x;
}

}  // namespace strathom::linalg
