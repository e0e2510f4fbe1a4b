#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pigeon::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // proof rejected or incomplete
inline constexpr int kExitUsage = 2;   // bad arguments or unreadable input

// Runs the command line `args` (args[0] is the program name). Data goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pigeon::cli
