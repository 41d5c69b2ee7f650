#pragma once

#include <string>
#include <vector>

#include "strathom/algebra/fd_algebra.hpp"

namespace strathom::algebra {

/// Names of the bundled algebras: FX-A2, FX-A3, FX-KRON, FX-41, FX-42, FX-43,
/// FX-CAN222.
const std::vector<std::string>& fixture_names();

/// Throws InvalidArgument for an unknown name.
Presentation fixture_presentation(const std::string& name, const Field& field = Field::rationals());
AlgebraPtr fixture(const std::string& name, const Field& field = Field::rationals());

/// k[x]/(x^n) as a one-loop quiver.
Presentation truncated_loop(std::size_t n, const Field& field = Field::rationals());

}  // namespace strathom::algebra
