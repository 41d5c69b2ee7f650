#pragma once

#include <string>

#include "strathom/io/document.hpp"

namespace strathom::io {

/// Module expressions over a fixed algebra:
///
///   expr    := term ('+' term)*
///   term    := factor ('^' n)?
///   factor  := primary ('/' 'tr' '(' expr ')')*     quotient by the trace
///   primary := 'P' v | 'S' v | 'A' | '0' | 'rad' '(' expr ')' | 'top' '(' expr ')'
///            | '(' expr ')' | '{' explicit module JSON '}'
///
/// A vertex v is a run of letters, digits and '_' or any name in brackets,
/// e.g. P2, S[inf]. Errors are Parse errors with the character offset.
rep::Representation evaluate_module(const AlgebraPtr& a, const std::string& expr);

}  // namespace strathom::io
