#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace strathom::io {

/// Exit codes of the command-line surface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUnknown = 2;

/// Result of one command. `result` holds verdicts, certificates, dimensions
/// and trees; `provenance` names the fixture or the SHA-256 of each input file.
struct Report {
  std::vector<std::string> command;
  nlohmann::ordered_json provenance = nlohmann::ordered_json::object();
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  std::string error;
  int exit_code = kExitOk;
  bool json = false;
  /// DOT graph or help text; replaces the other renderings when set.
  std::string verbatim;

  nlohmann::ordered_json to_json() const;
  /// Indented key: value lines.
  std::string to_text() const;
  /// verbatim, else the JSON (two-space indent) or text rendering.
  std::string render() const;
};

/// Lowercase hex digest.
std::string sha256_hex(const std::string& bytes);

}  // namespace strathom::io
