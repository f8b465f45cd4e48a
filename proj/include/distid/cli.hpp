#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace distid {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,     // bad flags, unreadable or malformed input
  kExitNegative = 2,  // infeasible instance or a failed check
  kExitAborted = 3,   // a solver ran out of budget
};

/// Runs one command. `args` excludes the program name. The report goes to
/// `out` as `key value` lines, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distid
