#include "strathom/linalg/subspace.hpp"

#include "strathom/linalg/rref.hpp"

namespace strathom::linalg {

Subspace::Subspace(const Field& field, std::size_t ambient) : ambient_(ambient), basis_(field, 0, ambient) {}

Subspace::Subspace(const Matrix& generators) : ambient_(generators.cols()) {
  const Matrix r = rref_only(generators, &pivots_);
  std::vector<std::size_t> keep(pivots_.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  basis_ = r.select_rows(keep);
}

std::vector<std::size_t> Subspace::complement_columns() const {
  std::vector<bool> pivot(ambient_, false);
  for (auto c : pivots_) pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (!pivot[c]) out.push_back(c);
  }
  return out;
}

Matrix Subspace::reduce(const Matrix& v) const {
  if (v.rows() != 1 || v.cols() != ambient_) throw Error(ErrorKind::ShapeMismatch, "Subspace::reduce expects 1×n");
  Matrix r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar f = r(0, pivots_[i]);
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_(i, j).is_zero()) r(0, j).sub_mul(f, basis_(i, j));
    }
  }
  return r;
}

bool Subspace::contains_all(const Matrix& rows) const {
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    if (!contains(rows.row(i))) return false;
  }
  return true;
}

Matrix Subspace::quotient_coordinates(const Matrix& rows) const {
  const auto comp = complement_columns();
  Matrix out(rows.field(), rows.rows(), comp.size());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const Matrix r = reduce(rows.row(i));
    for (std::size_t j = 0; j < comp.size(); ++j) out(i, j) = r(0, comp[j]);
  }
  return out;
}

std::optional<Matrix> Subspace::coordinates(const Matrix& rows) const {
  Matrix out(rows.field(), rows.rows(), dim());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const Matrix v = rows.row(i);
    if (!contains(v)) return std::nullopt;
    // In RREF the coordinate along basis row k is the entry at its pivot.
    for (std::size_t k = 0; k < pivots_.size(); ++k) out(i, k) = v(0, pivots_[k]);
  }
  return out;
}

Subspace Subspace::sum(const Subspace& o) const { return Subspace(vstack(basis_, o.basis_)); }

Subspace Subspace::intersect(const Subspace& o) const {
  // x*A = y*B  <=>  [x y] * [A; -B] = 0
  if (dim() == 0 || o.dim() == 0) return Subspace(field(), ambient_);
  const Matrix stacked = vstack(basis_, o.basis_.scaled(-Scalar::one(field())));
  const Matrix lk = left_kernel(stacked);
  if (lk.rows() == 0) return Subspace(field(), ambient_);
  const Matrix xs = lk.block(0, 0, lk.rows(), dim());
  return Subspace(xs * basis_);
}

Matrix left_kernel(const Matrix& m) { return kernel_basis(m.transpose()).transpose(); }

}  // namespace strathom::linalg
