#pragma once

#include <iosfwd>

namespace cuspcodes {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs the `cuspcodes` command line. Reports go to `out`, diagnostics and
/// wall-clock timings to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cuspcodes
