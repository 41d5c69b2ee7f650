#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strathom/algebra/quiver.hpp"
#include "strathom/linalg/matrix.hpp"
#include "strathom/linalg/subspace.hpp"

namespace strathom::algebra {

using linalg::Matrix;
using linalg::Subspace;

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// One element of a Peirce basis: it lies in e_source A e_target. `word`
/// lists generator indices whose product is this element (empty for a vertex
/// idempotent).
struct BasisElement {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> word;
};

/// Finite-dimensional algebra with a complete set of orthogonal primitive
/// idempotents that are themselves basis elements, every other basis element
/// lying in a single Peirce block. Elements are 1×dim rows.
class FDAlgebra {
 public:
  struct Parts {
    Field field;
    std::string name;
    std::string origin;  // "presentation" or "abstract"
    std::vector<std::string> vertices;
    std::vector<BasisElement> basis;
    std::vector<std::size_t> idempotents;  // basis index per vertex
    std::vector<std::size_t> generators;   // basis indices
    std::vector<SparseVec> table;          // dim*dim products
    std::optional<Subspace> radical;       // computed when absent
    std::optional<Presentation> presentation;
  };

  explicit FDAlgebra(Parts parts);

  const Field& field() const noexcept { return p_.field; }
  const std::string& name() const noexcept { return p_.name; }
  const std::string& origin() const noexcept { return p_.origin; }
  std::size_t dim() const noexcept { return p_.basis.size(); }
  std::size_t num_vertices() const noexcept { return p_.vertices.size(); }
  const std::vector<std::string>& vertices() const noexcept { return p_.vertices; }
  const BasisElement& basis(std::size_t i) const { return p_.basis.at(i); }
  const std::vector<BasisElement>& basis() const noexcept { return p_.basis; }
  std::size_t idempotent(std::size_t v) const { return p_.idempotents.at(v); }
  const std::vector<std::size_t>& generators() const noexcept { return p_.generators; }
  const std::optional<Presentation>& presentation() const noexcept { return p_.presentation; }
  const Subspace& radical() const noexcept { return *p_.radical; }
  std::optional<std::size_t> vertex_index(const std::string& name) const;

  /// b_i * b_j in basis coordinates.
  const SparseVec& product(std::size_t i, std::size_t j) const { return p_.table[i * dim() + j]; }
  Matrix mul(const Matrix& a, const Matrix& b) const;
  Matrix unit() const;
  Matrix zero() const { return Matrix(field(), 1, dim()); }
  Matrix basis_vector(std::size_t i) const;
  /// dim×dim matrix of x -> x*a (row convention).
  Matrix right_mult(const Matrix& a) const;
  /// dim×dim matrix of x -> a*x.
  Matrix left_mult(const Matrix& a) const;
  /// Basis indices lying in e_u A e_v.
  std::vector<std::size_t> block(std::size_t u, std::size_t v) const;
  /// The quiver: the presentation's when present, otherwise read off
  /// e_u (rad/rad^2) e_v.
  Quiver quiver() const;
  std::string element_to_string(const Matrix& a) const;

  const Parts& parts() const noexcept { return p_; }

 private:
  Parts p_;
};

using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

inline constexpr std::size_t kDefaultPathCap = 30;

/// Builds kQ/I for the presentation, via a Groebner basis in deglex order
/// (length, then arrow declaration order) and certifies nilpotency of the
/// arrow ideal.
AlgebraPtr build_algebra(const Presentation& p, std::size_t path_length_cap = kDefaultPathCap);

AlgebraPtr opposite_algebra(const FDAlgebra& a);

/// A/AeA for e the sum of the idempotents of `e_vertices`.
AlgebraPtr quotient_by_idempotent_ideal(const FDAlgebra& a, const std::vector<std::size_t>& e_vertices);

/// eAe for e the sum of the idempotents of `e_vertices`.
AlgebraPtr corner_algebra(const FDAlgebra& a, const std::vector<std::size_t>& e_vertices);

/// Basis of the two-sided ideal AeA as rows.
Subspace idempotent_ideal(const FDAlgebra& a, const std::vector<std::size_t>& e_vertices);

bool is_directed(const FDAlgebra& a);

/// True when the subspace is a nilpotent set under the algebra product.
bool is_nilpotent_ideal(const FDAlgebra& a, const Subspace& s);

/// Structure-constant checks: associativity on basis triples, unit law,
/// Peirce compatibility.
bool check_associative(const FDAlgebra& a);
bool check_unit(const FDAlgebra& a);

}  // namespace strathom::algebra
