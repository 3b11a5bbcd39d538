#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nzi::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kPrecondition = 3,
  kNoConvergence = 4,
};

/// Runs one CLI invocation. args excludes the program name. Reports go to
/// out, diagnostics to err; stdin is read when --input is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nzi::cli
