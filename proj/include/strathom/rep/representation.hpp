#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "strathom/algebra/fd_algebra.hpp"

namespace strathom::rep {

using algebra::AlgebraPtr;
using algebra::FDAlgebra;
using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;
using linalg::Subspace;

/// A finite-dimensional right module: a vector space per vertex and, for every
/// generator g in e_s A e_t, a dim_s × dim_t matrix acting on row vectors.
/// The total space orders its basis vertex by vertex; morphisms are stored as
/// block-diagonal total matrices in the same row convention.
class Representation {
 public:
  Representation() = default;
  /// Validates the module axioms against the algebra's structure constants.
  Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> generator_maps);

  static Representation zero(AlgebraPtr alg);

  const FDAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return alg_; }
  const Field& field() const { return alg_->field(); }

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  std::size_t total_dim() const noexcept { return total_; }
  std::size_t offset(std::size_t v) const { return offsets_.at(v); }
  bool is_zero() const noexcept { return total_ == 0; }

  const Matrix& generator_map(std::size_t g) const { return gens_.at(g); }
  const std::vector<Matrix>& generator_maps() const noexcept { return gens_; }
  /// dim_s × dim_t block of a basis element of e_s A e_t.
  const Matrix& basis_block(std::size_t i) const { return basis_blocks_.at(i); }
  /// Total matrix of x -> x*a for an algebra element a (1×dim A).
  Matrix action(const Matrix& a) const;
  /// Total matrix of a single basis element.
  Matrix basis_action(std::size_t i) const;
  /// Block from vertex s to vertex t of the action of an element of e_s A e_t.
  Matrix action_block(const Matrix& a, std::size_t s, std::size_t t) const;

  /// Rows of the identity spanning M e_v inside the total space.
  Matrix vertex_rows(std::size_t v) const;

  std::string dim_vector_string() const;

 private:
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  std::vector<Matrix> gens_;
  std::vector<Matrix> basis_blocks_;
};

/// Indecomposable projective e_v A with basis the Peirce basis elements
/// starting at v.
Representation projective(AlgebraPtr alg, std::size_t v);
/// Coordinates in projective(alg, v) of an element of e_v A.
Matrix projective_coordinates(const FDAlgebra& a, std::size_t v, const Matrix& x);

/// Top of the projective at v.
Representation simple(AlgebraPtr alg, std::size_t v);
/// The regular right module A_A.
Representation regular(AlgebraPtr alg);

struct SumData {
  Representation sum;
  /// injections[k]: summand k -> sum; projections[k]: sum -> summand k.
  std::vector<Matrix> injections;
  std::vector<Matrix> projections;
};

SumData direct_sum(const std::vector<Representation>& parts);
Representation direct_sum(const Representation& a, const Representation& b);
Representation power(const Representation& m, std::size_t n);

struct ActionModule {
  Representation module;
  /// Rows: the module's basis in the coordinates of the original space.
  Matrix basis_change;
};

/// Module on k^n from right-action matrices, one n×n matrix per basis element
/// of the algebra. Vertex spaces are the images of the idempotents.
ActionModule from_action(AlgebraPtr alg, std::size_t n, const std::vector<Matrix>& basis_actions);

/// True when m and n have the same algebra, dims and generator matrices.
bool same_presentation(const Representation& m, const Representation& n);

}  // namespace strathom::rep
