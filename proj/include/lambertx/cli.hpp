#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lambertx::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitUsage = 64;

// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lambertx::cli
