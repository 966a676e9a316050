#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropic::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kSuccess = 0,        ///< success, or a positive verdict
  kNegative = 1,       ///< well-posed negative verdict (no solution, dependent, ...)
  kInternal = 2,       ///< internal error or oracle disagreement
  kUsage = 64,         ///< bad command line
  kDataError = 65,     ///< malformed or ill-posed input files
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropic::cli
