#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gencomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gencomp::cli
