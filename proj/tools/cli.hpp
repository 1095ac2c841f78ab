#pragma once

#include <string>
#include <vector>

namespace memsim::cli {

inline constexpr int kExitSolved = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNonConvergent = 2;

// Runs the command line (without the program name) and returns the exit code.
// Diagnostics go to stderr.
int main(const std::vector<std::string>& args);

}  // namespace memsim::cli
