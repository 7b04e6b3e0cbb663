#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace descartes::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kNumericFailure = 3,
};

/// Runs the command line `args` (args[0] is the program name) with the given
/// streams standing in for stdin/stdout/stderr. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace descartes::cli
