#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hecke::cli {

/// Exit codes of the `hecke` tool.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kSizeGuard = 3,
  kInternal = 4,
};

/// Runs one command line (without the program name). Results go to `out`
/// (or to --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecke::cli
