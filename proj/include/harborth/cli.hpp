#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harborth {

// Exit codes shared by the CLI and its tests.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;         // bad flags, group literal, k range, unreadable file
inline constexpr int kExitBudget = 3;        // search stopped by node/time budget
inline constexpr int kExitVerification = 4;  // a claimed property failed to verify

/// Runs the command line given as plain arguments (no program name). All
/// report output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harborth
