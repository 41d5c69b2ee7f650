#pragma once

#include <string>

#include "json.hpp"
#include "strathom/algebra/fd_algebra.hpp"
#include "strathom/homology/complex.hpp"
#include "strathom/rep/representation.hpp"

namespace strathom::io {

using algebra::AlgebraPtr;
using algebra::Presentation;
using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

/// A presentation file:
///
///   {"format_version": "1", "name": "FX-42", "field": "Q",
///    "quiver": {"vertices": ["1", "2"],
///               "arrows": [{"id": "alpha", "source": "2", "target": "1"}, ...]},
///    "relations": [["alpha", "beta", "alpha"],
///                  [{"coeff": "1", "path": ["a", "b"]}, {"coeff": "-1", "path": ["c", "d"]}]]}
///
/// A relation is either one path (coefficient 1) or a list of terms. `name`
/// is optional; every other key is required and unknown keys are rejected.
struct AlgebraDocument {
  std::string format_version = kFormatVersion;
  Presentation presentation;
};

/// Syntax errors carry "line L, column C"; semantic errors (unknown vertex or
/// arrow, non-composable or non-parallel paths) are MalformedRelation or
/// InvalidArgument.
AlgebraDocument parse_algebra(const std::string& text);
/// Canonical form: two-space indentation, keys in schema order, trailing newline.
std::string serialize(const AlgebraDocument& doc);
AlgebraDocument document_of(const Presentation& p);

/// Parses JSON text; a syntax error becomes a Parse error at the line and
/// column of the last character read.
Json parse_json(const std::string& text);

/// Element of a presentation algebra: a path (list of arrow ids), a list of
/// terms {"coeff", "path"} or {"coeff", "vertex"}, or [] for zero.
linalg::Matrix element_from_json(const algebra::FDAlgebra& a, const Json& j);
Json element_to_json(const algebra::FDAlgebra& a, const linalg::Matrix& x);

/// Explicit module: {"format_version": "1", "dim_vector": [...],
/// "arrows": {"alpha": [["1", "0"], ...], ...}}. Missing arrows act by zero.
rep::Representation module_from_json(const AlgebraPtr& a, const Json& j);
Json module_to_json(const rep::Representation& m);

/// Complex of projectives: {"format_version": "1", "algebra": "FX-43",
/// "lowest": -2, "terms": [["2"], ["1"]], "differentials": [[[element, ...], ...], ...]}
/// where differential i is a (terms[i] × terms[i+1]) matrix of elements.
homology::ProjComplex complex_from_json(const AlgebraPtr& a, const Json& j);
Json complex_to_json(const homology::ProjComplex& c);

}  // namespace strathom::io
