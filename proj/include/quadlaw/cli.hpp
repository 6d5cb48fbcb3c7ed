#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadlaw {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitMalformed = 1,
  kExitPrecondition = 2,
  kExitNotEquivalent = 3,
  kExitUnknown = 4,
  kExitCounterexamples = 5,
  kExitInternal = 70,
};

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`; a file argument of "-" reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace quadlaw
