#pragma once

#include <vector>

#include "strathom/rep/representation.hpp"

namespace strathom::rep {

/// Basis of Hom_A(m, n); each element is a block-diagonal total matrix
/// (total_dim m × total_dim n) with x -> x f.
std::vector<Matrix> hom_space(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);
bool is_morphism(const Representation& m, const Representation& n, const Matrix& f);

/// Submodules are graded subspaces of the total space closed under the action.
bool is_submodule(const Representation& m, const Subspace& u);
/// Submodule generated by the given rows.
Subspace generated_submodule(const Representation& m, const Matrix& rows);

struct SubRep {
  Representation module;
  Matrix inclusion;  // module -> ambient
};
SubRep submodule_rep(const Representation& m, const Subspace& u);

struct QuotientRep {
  Representation module;
  Matrix projection;  // ambient -> module
};
/// Throws NotSubmodule when u is not closed under the action.
QuotientRep quotient_module(const Representation& m, const Subspace& u);

struct MorphismParts {
  SubRep kernel;
  Subspace image;
  QuotientRep cokernel;
};
MorphismParts morphism_parts(const Representation& m, const Representation& n, const Matrix& f);

/// Sum of the images of all morphisms x -> m.
Subspace trace_submodule(const Representation& x, const Representation& m);

/// m * rad(A).
Subspace radical_submodule(const Representation& m);
QuotientRep top(const Representation& m);

struct ProjectiveCover {
  std::vector<std::size_t> vertices;  // one indecomposable projective per entry
  Representation projective;
  /// projective -> m; its kernel lies in the radical of the projective.
  Matrix map;
  /// Image of the generator e_v of each summand, as a row of m.
  Matrix generator_images;
};
ProjectiveCover projective_cover(const Representation& m);

/// Multiplicity of each indecomposable projective in the cover of m.
std::vector<std::size_t> top_multiplicities(const Representation& m);

}  // namespace strathom::rep
