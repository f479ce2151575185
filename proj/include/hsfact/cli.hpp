#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hsfact::cli {

/// Exit codes of run().
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kResourceLimit = 3,
  kInternal = 4,
};

/// Runs one command line (without the program name). The JSON report goes
/// to out, or to the --json file with a summary on out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsfact::cli
