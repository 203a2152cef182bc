#pragma once

#include <iosfwd>

namespace ringlat::app {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kBudgetError = 2,
  kInvariantError = 3,
};

/// Entry point of the command-line front end; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ringlat::app
