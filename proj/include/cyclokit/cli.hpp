#pragma once

#include <ostream>

namespace cyclokit {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitParse = 2,
  kExitPrecondition = 3,
  kExitSizeBound = 4,
};

// Entry point of the cyclokit command line tool. JSON goes to out,
// diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclokit
