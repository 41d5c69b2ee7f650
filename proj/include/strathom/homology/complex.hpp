#pragma once

#include <map>
#include <optional>

#include "strathom/homology/projmap.hpp"

namespace strathom::homology {

/// Bounded cochain complex of projectives; terms[i] sits in degree lowest + i
/// and diffs[i]: terms[i] -> terms[i+1].
struct ProjComplex {
  AlgebraPtr algebra;
  int lowest = 0;
  std::vector<std::vector<std::size_t>> terms;
  std::vector<ProjMap> diffs;
  bool minimal = false;

  int highest() const { return lowest + static_cast<int>(terms.size()) - 1; }
  const std::vector<std::size_t>& term(int degree) const;
  bool is_zero() const;
};

/// d ∘ d = 0 and every entry lies in the right Peirce block.
bool is_complex(const ProjComplex& c);

struct MinimizeResult {
  ProjComplex complex;
  /// r + s for the nonzero window [-s, r]; 0 for the zero complex.
  std::size_t length = 0;
  std::size_t cancellations = 0;
};

/// Gaussian cancellation of isomorphism entries, scanning degrees ascending
/// then summands ascending.
MinimizeResult minimize_complex(const ProjComplex& c);

/// No entry is an isomorphism between indecomposable summands.
bool is_minimal(const ProjComplex& c);

/// dim H^n(X) = dim Hom(A, X[n]) for each degree n with a nonzero term.
std::map<int, std::size_t> cohomology_dims(const ProjComplex& c);

/// dim Hom_K(X, A[n]), keyed by n.
std::map<int, std::size_t> hom_to_regular_dims(const ProjComplex& c);

/// max{n : Hom(A, X[n]) != 0} and max{n : Hom(X, A[n]) != 0}; nullopt when all vanish.
std::optional<int> r_invariant(const ProjComplex& c);
std::optional<int> s_invariant(const ProjComplex& c);

/// P_2 -> P_2 -> ... -> P_2 -> P_1 over FX-43 with m differentials, the last
/// one left multiplication by beta and the others by alpha*beta; P_1 in degree 0.
ProjComplex staircase(const AlgebraPtr& fx43, std::size_t m);

}  // namespace strathom::homology
