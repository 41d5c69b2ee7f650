#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "strathom/tilting/tilting.hpp"

namespace strathom::tilting {

struct AlgebraSignature {
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  std::size_t radical_dim = 0;
  bool commutative = true;
  auto operator<=>(const AlgebraSignature&) const = default;
  std::string to_string() const;
};

std::size_t center_dim(const FDAlgebra& a);
AlgebraSignature signature(const FDAlgebra& a);

/// C = End(t1) and the projective dimension of t1 as a left C-module, that is
/// as a right module over C^op.
struct CSide {
  Representation t1;
  std::optional<rep::EndomorphismAlgebra> c;
  DimVerdict pd;
  std::size_t rank = 0;
};
CSide c_side(const Representation& t1, std::size_t cap = kDefaultCap);

/// Generating data of the recollement D(B) -> D(A) -> D(C). Unmet hypotheses
/// are listed in `failures`; the data computed so far is kept.
struct RecollementDatum {
  AlgebraPtr a;
  Ell ell;
  /// Empty when ell(A) = 0, that is B = 0.
  std::optional<InducedEpi> epi;
  CSide c;
  Verdict homological_epi = Verdict::Unknown;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::size_t n_c = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  bool ranks_additive() const { return n_a == n_b + n_c; }
};

RecollementDatum recollement_from_tilting(const Representation& t, const TResolution& res, std::size_t cap = kDefaultCap);

struct HeredityReport {
  AlgebraPtr quotient;  // A/AeA
  AlgebraPtr corner;    // eAe
  bool projective = false;
  bool semisimple_corner = false;
  RecollementDatum datum;
  bool heredity() const { return projective && semisimple_corner; }
};

/// AeA as a right A-module.
Representation idempotent_ideal_module(const AlgebraPtr& a, const std::vector<std::size_t>& e_vertices);

/// Heredity conditions for AeA, then the recollement of T = A with the
/// resolution 0 -> A -> A ⊕ eA -> eA -> 0, whose ell(A) is A/AeA.
HeredityReport heredity_check_and_recollement(const AlgebraPtr& a, const std::vector<std::size_t>& e_vertices,
                                              std::size_t cap = kDefaultCap);

/// Bongartz completion of an exceptional multiplicity-free x over a hereditary
/// algebra, then ell, B and the recollement with C = End(x).
RecollementDatum perpendicular_epi(const Representation& x, std::size_t cap = kDefaultCap);

}  // namespace strathom::tilting
