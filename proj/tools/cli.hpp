#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mainprob::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,       // any other numerical failure
  kConfigError = 2,
  kResonance = 3,
  kOracleAccuracy = 4,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mainprob::cli
