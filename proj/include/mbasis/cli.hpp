#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mbasis::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kInvalidInput = 2,
  kLimitExceeded = 3,
  kInternalError = 4,
};

/// Runs the command line `args` (program name excluded), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mbasis::cli
