#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symsens::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kVerificationFailure = 2,
  kSizeError = 3,
};

/// Runs the command line `args` (args[0] is the program name). Normal
/// output goes to `out` unless --out is given; diagnostics go to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace symsens::cli
