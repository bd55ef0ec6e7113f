#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liebranch {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

/// Runs the command line `args` (program name first) and returns the exit
/// code. Results go to `out`, diagnostics to `err` as a single line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liebranch
