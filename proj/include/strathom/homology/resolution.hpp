#pragma once

#include <memory>
#include <optional>
#include <string>

#include "strathom/homology/projmap.hpp"

namespace strathom::homology {

enum class ResolutionStatus { Terminated, Periodic, Truncated };

/// Minimal projective resolution P^(k) -> ... -> P^(0) -> M.
struct Resolution {
  Representation module;
  std::size_t cap = 0;
  std::vector<std::vector<std::size_t>> terms;  // vertices of P^(k), k = 0..computed
  std::vector<ProjMap> differentials;           // differentials[k-1]: P^(k) -> P^(k-1)
  std::vector<Representation> syzygies;         // syzygies[k] = Omega^k M, syzygies[0] = M
  /// covers[k]: P^(k) -> Omega^k M;  kernels[k]: Omega^(k+1) M inside P^(k).
  std::vector<rep::ProjectiveCover> covers;
  std::vector<rep::SubRep> kernels;
  ResolutionStatus status = ResolutionStatus::Truncated;
  std::size_t length = 0;        // Terminated: last nonzero degree
  std::size_t period_start = 0;  // Periodic: Omega^(start+period) ≅ Omega^start
  std::size_t period = 0;

  /// Vertices of P^(k), empty beyond the computed range.
  const std::vector<std::size_t>& term(std::size_t k) const;
  std::string status_string() const;
};

/// Resolution up to degree cap (cached per algebra and module).
std::shared_ptr<const Resolution> minimal_projective_resolution(const Representation& m, std::size_t cap);

/// Projective or global dimension verdict.
struct DimVerdict {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t value = 0;
  std::string to_string() const;
  friend bool operator==(const DimVerdict& a, const DimVerdict& b) { return a.kind == b.kind && a.value == b.value; }
  static DimVerdict finite(std::size_t d) { return {Kind::Finite, d}; }
  static DimVerdict infinite() { return {Kind::Infinite, 0}; }
  static DimVerdict unknown() { return {Kind::Unknown, 0}; }
};

enum class Verdict { True, False, Unknown };
const char* to_string(Verdict v);

std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t k);

/// Tor_k(m, l) for l a right module over the opposite algebra of m's algebra.
std::size_t tor_dim(const Representation& m, const Representation& l, std::size_t k);

/// Degree-zero part m ⊗_A l.
std::size_t tensor_dim(const Representation& m, const Representation& l);

DimVerdict proj_dim(const Representation& m, std::size_t cap);
DimVerdict global_dim(const AlgebraPtr& a, std::size_t cap);

/// Ext^k(m, m) = 0 for 1 <= k <= pd bound.
Verdict is_exceptional(const Representation& m, std::size_t cap);

/// Drops every cached resolution.
void clear_resolution_cache();

}  // namespace strathom::homology
