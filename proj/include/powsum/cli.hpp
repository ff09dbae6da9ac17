#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powsum::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInvalidInput = 2 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powsum::cli
