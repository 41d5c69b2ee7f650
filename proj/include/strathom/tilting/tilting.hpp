#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strathom/homology/resolution.hpp"
#include "strathom/rep/decompose.hpp"

namespace strathom::tilting {

using algebra::AlgebraPtr;
using algebra::FDAlgebra;
using homology::DimVerdict;
using homology::Verdict;
using linalg::Matrix;
using linalg::Subspace;
using rep::Representation;

inline constexpr std::size_t kDefaultCap = 20;

/// 0 -> A -> t0 -> t1 -> 0, with iota: A_A -> t0 and pi: t0 -> t1 as total
/// matrices; A_A is rep::regular.
struct TResolution {
  Representation t0;
  Representation t1;
  Matrix iota;
  Matrix pi;
};

struct TiltingCertificate {
  Representation t;
  DimVerdict pd;
  std::size_t ext1 = 0;
  std::optional<TResolution> resolution;
  bool tilting = false;
  std::vector<std::string> failures;
};

/// One representative per isomorphism class of indecomposable summands.
std::vector<Representation> basic_summands(const Representation& m);

/// Every indecomposable summand of x is isomorphic to a summand of t.
bool in_add(const Representation& x, const Representation& t);

/// Coordinates of an algebra element (1×dim A) in the total space of A_A.
Matrix regular_coordinates(const AlgebraPtr& a, const Matrix& x);

/// Throws InvalidResolution unless the sequence is exact with both terms in add(t).
void validate_resolution(const Representation& t, const TResolution& res);

/// Minimal left add(t)-approximation A -> t0 and its cokernel; iota need not
/// be injective when t is not tilting.
TResolution approximation_sequence(const Representation& t);

TiltingCertificate check_tilting(const Representation& t, std::size_t cap = kDefaultCap);

/// Same checks with a caller-supplied resolution in place of the approximation.
TiltingCertificate check_tilting(const Representation& t, const TResolution& res, std::size_t cap = kDefaultCap);

/// 0 -> A -> A ⊕ eA -> eA -> 0 with a -> (a, 0), for e the sum of the
/// idempotents at e_vertices.
TResolution idempotent_resolution(const AlgebraPtr& a, const std::vector<std::size_t>& e_vertices);

/// Ext^1(e, m) as Hom(Ωe, m) modulo maps factoring through the projective cover.
struct ExtClasses {
  rep::ProjectiveCover cover;
  rep::SubRep syzygy;
  /// Representatives Ωe -> m of a basis of Ext^1(e, m).
  std::vector<Matrix> classes;
};
ExtClasses ext1_classes(const Representation& e, const Representation& m);

/// 0 -> m -> extension -> e^n -> 0 whose connecting classes span Ext^1(e, m).
struct UniversalExtension {
  Representation extension;
  Representation quotient;  // e^n
  std::size_t n = 0;
  Matrix inclusion;   // m -> extension
  Matrix projection;  // extension -> e^n
};
UniversalExtension universal_extension(const Representation& e, const Representation& m);

struct BongartzComplement {
  /// Basic module with the summands of m and of the extension.
  Representation tilting;
  /// Summands of the extension outside add(m), one copy each.
  Representation complement;
  /// 0 -> A -> extension -> m^n -> 0.
  UniversalExtension sequence;
  TResolution resolution;
};
BongartzComplement bongartz_complement(const Representation& m, std::size_t cap = kDefaultCap);

struct Ell {
  Representation module;
  Matrix unit;  // source -> module, the source being A_A for ell()
  std::size_t trace_dim = 0;
};

/// t0 / trace of t1 in t0, with the composite A -> t0 -> quotient.
Ell ell(const TResolution& res);

/// Universal extension of t1 by m, then the trace of t1 factored out.
Ell left_approximation(const Representation& t1, const Representation& m);

struct InducedEpi {
  AlgebraPtr a;
  rep::EndomorphismAlgebra b;
  /// dim A × dim B; row i is phi of basis element i.
  Matrix phi;
  Matrix apply(const Matrix& x) const { return x * phi; }
};

/// B = End(ell A) and phi(x) the endomorphism sending unit(1) to unit(x).
InducedEpi induced_epi(const AlgebraPtr& a, const Ell& l);

bool is_unital_multiplicative(const FDAlgebra& a, const FDAlgebra& b, const Matrix& phi);

/// B as a right A-module through phi.
Representation restriction_right(const AlgebraPtr& a, const FDAlgebra& b, const Matrix& phi);
/// B as a left A-module through phi, given as a right module over A^op.
Representation restriction_left(const AlgebraPtr& a_op, const FDAlgebra& b, const Matrix& phi);

/// Fast path when gldim A is finite and B_A is exceptional; otherwise ring
/// epimorphism plus Tor^A_k(B, B) = 0 up to the cap. Non-exceptional B_A is
/// a certified negative.
Verdict is_homological_epi(const AlgebraPtr& a, const FDAlgebra& b, const Matrix& phi, std::size_t cap = kDefaultCap);

}  // namespace strathom::tilting
