#pragma once

#include <vector>

#include "strathom/linalg/matrix.hpp"

namespace strathom::linalg {

/// Jacobson radical of the unital algebra spanned by the square matrices
/// `basis` (closed under products). Returns coefficient rows with respect to
/// `basis`, one row per radical basis vector.
///
/// Characteristic 0 or above the matrix size uses the kernel of the trace
/// form. Small characteristic uses the chain of lifted trace forms
/// g_i(a) = tr(lift(a)^(p^i)) / p^i mod p.
Matrix matrix_algebra_radical(const std::vector<Matrix>& basis);

/// True when every product of `size` elements of the span is zero for some size.
bool is_nilpotent_span(const std::vector<Matrix>& elements);

}  // namespace strathom::linalg
