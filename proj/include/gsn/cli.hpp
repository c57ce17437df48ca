#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gsn {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Runs the `gsn` command line. `args` excludes the program name. Reports go
/// to `out` unless --output is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsn
