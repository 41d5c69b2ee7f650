#pragma once

#include <vector>

#include "strathom/rep/morphism.hpp"

namespace strathom::homology {

using algebra::AlgebraPtr;
using algebra::FDAlgebra;
using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;
using linalg::Subspace;
using rep::Representation;

/// Map between direct sums of indecomposable projectives P_u = e_u A.
/// entry[s][t] is an element of e_{target[t]} A e_{source[s]} (a 1 x dim A row);
/// the generator of summand s goes to sum_t entry[s][t] in summand t.
struct ProjMap {
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;
  std::vector<std::vector<Matrix>> entry;

  static ProjMap zero(const FDAlgebra& a, std::vector<std::size_t> source, std::vector<std::size_t> target);
  bool is_zero() const;
};

/// g ∘ f.
ProjMap compose(const FDAlgebra& a, const ProjMap& f, const ProjMap& g);

/// Sum of projectives in a fixed order, with its split maps.
struct ProjSum {
  std::vector<std::size_t> vertices;
  Representation module;
  std::vector<Matrix> injections;
  std::vector<Matrix> projections;
};
ProjSum proj_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& vertices);

/// Total matrix of f between the modules of two ProjSums.
Matrix total_matrix(const FDAlgebra& a, const ProjSum& src, const ProjSum& tgt, const ProjMap& f);

/// Element form of a module map between two ProjSums.
ProjMap element_form(const FDAlgebra& a, const ProjSum& src, const ProjSum& tgt, const Matrix& total);

/// Hom_A(f, n): from (+)_t n e_{target t} to (+)_s n e_{source s}, rows acting on the right.
Matrix hom_into(const Representation& n, const ProjMap& f);

/// f ⊗_A l for l a left A-module given as a right module over the opposite
/// algebra (same basis indexing): from (+)_s e_{source s} l to (+)_t e_{target t} l.
Matrix tensor_with(const Representation& l, const ProjMap& f);

/// Dimension of the middle homology of  U --a--> V --b--> W  (row vectors,
/// a is dim U x dim V, b is dim V x dim W); either map may have no rows/cols.
std::size_t middle_homology(std::size_t dim_v, const Matrix* a, const Matrix* b);

}  // namespace strathom::homology
