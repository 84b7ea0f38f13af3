#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace maxminsep::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitPromiseViolation = 2;
inline constexpr int kExitUsage = 10;
inline constexpr int kExitInput = 11;
inline constexpr int kExitContract = 12;
inline constexpr int kExitGuard = 13;
inline constexpr int kExitHashMismatch = 14;
inline constexpr int kExitInternal = 15;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxminsep::cli
