#pragma once

#include <iosfwd>

namespace stroud::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 2,
  kVerificationFailure = 3,
  kNumericFailure = 4,
};

/// Parses and executes one command; output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stroud::cli
