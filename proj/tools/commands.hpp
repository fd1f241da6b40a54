#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace squeezelab::cli {

enum ExitCode : int {
  kOk = 0,
  kArgumentError = 2,
  kVerificationFailure = 3,
  kNonConvergence = 4,
};

/// Parses command-line arguments (without the program name), runs one
/// command and returns its exit code. Data goes to `out` unless --out is
/// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace squeezelab::cli
