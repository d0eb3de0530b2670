#pragma once

#include <iosfwd>

namespace dwtsteg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kData = 2,
  kCapacity = 3,
};

/// Runs one command line (argv[0] is the program name). Facts go to `out` as
/// key=value lines; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dwtsteg::cli
