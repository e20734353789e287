#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genocchi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailures = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceLimit = 3;

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace genocchi::cli
