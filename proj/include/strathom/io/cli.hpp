#pragma once

#include <string>
#include <vector>

#include "strathom/io/report.hpp"

namespace strathom::io {

/// Runs one strathom subcommand; `args` excludes the program name. Input
/// errors become a report with exit code 1 instead of an exception.
Report run_command(const std::vector<std::string>& args);

}  // namespace strathom::io
