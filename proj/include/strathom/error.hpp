#pragma once

#include <stdexcept>
#include <string>

namespace strathom {

/// Kinds of failures raised by the library. Unmet theorem hypotheses are not
/// errors; those are reported as data (see tilting/recollement.hpp).
enum class ErrorKind {
  ShapeMismatch,
  DomainMismatch,
  DivisionByZero,
  MalformedRelation,
  NotFiniteDimensional,
  NotSubmodule,
  RadicalUnavailable,
  NotDirected,
  NotPartialTilting,
  NotHereditary,
  NotExceptional,
  InvalidResolution,
  InvalidModule,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace strathom
