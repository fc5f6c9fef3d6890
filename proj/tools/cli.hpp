#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdmd::cli {

/// Exit codes: 0 success, 1 a check failed or a budget ran out, 2 usage or
/// input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name), writing results
/// to `out` unless --out is given, and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdmd::cli
