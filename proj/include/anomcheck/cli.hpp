#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace anomcheck {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitInternal = 3 };

// Runs the command line `args` (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anomcheck
