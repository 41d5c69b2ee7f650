#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strathom/rep/representation.hpp"

namespace strathom::rep {

/// Idempotents are searched among basis elements, their products and sums,
/// then seeded random combinations.
struct DecomposeOptions {
  std::size_t random_candidates = 64;
  std::uint64_t seed = 0x5eed;
};

struct Summand {
  Representation module;
  Matrix inclusion;   // summand -> ambient
  Matrix projection;  // ambient -> summand
};

/// Indecomposable summands realised by explicit split idempotents; the
/// inclusions and projections satisfy sum_k p_k i_k = id and i_k p_l = 0.
std::vector<Summand> split_indecomposables(const Representation& m, const DecomposeOptions& opts = {});

struct DecompositionEntry {
  Representation module;
  std::size_t multiplicity = 0;
};
std::vector<DecompositionEntry> decompose(const Representation& m, const DecomposeOptions& opts = {});

bool is_indecomposable(const Representation& m, const DecomposeOptions& opts = {});

/// Number of indecomposable summands counted with multiplicity.
std::size_t summand_count(const Representation& m);

bool is_isomorphic(const Representation& m, const Representation& n);

/// Radical of the subalgebra of total matrices spanned by `basis` (closed
/// under products, containing the identity), as coefficient rows.
Subspace matrix_algebra_radical(const std::vector<Matrix>& basis);

struct EndomorphismAlgebra {
  AlgebraPtr algebra;
  /// action[i]: total matrix of basis element i on m (b(x) = x * action[i]).
  std::vector<Matrix> action;
  std::vector<Summand> summands;
};

/// End_A(m) with product f*g = f∘g, rebased on the primitive idempotents of a
/// Krull-Schmidt decomposition of m.
EndomorphismAlgebra endomorphism_algebra(const Representation& m, const std::string& name = "End",
                                         const DecomposeOptions& opts = {});

}  // namespace strathom::rep
