#include <iostream>

#include "strathom/io/cli.hpp"

int main(int argc, char** argv) {
  const strathom::io::Report report = strathom::io::run_command({argv + 1, argv + argc});
  const bool to_err = report.exit_code == strathom::io::kExitInputError && !report.json && !report.error.empty();
  (to_err ? std::cerr : std::cout) << report.render();
  return report.exit_code;
}
