#pragma once

#include <iosfwd>

namespace tbm::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kInputError = 2,
  kPreconditionError = 3,
};

// Entry point of the `tbm` tool. Output files named with -o are written
// directly; everything else goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tbm::cli
