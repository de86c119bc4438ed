#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace comppat {

inline constexpr const char* kToolName = "comppat";
inline constexpr const char* kToolVersion = "0.1.0";
// Largest --order accepted by the table commands.
inline constexpr unsigned kMaxOrder = 60;
// verify enumerates every composition / word, so it gets tighter caps.
inline constexpr unsigned kMaxBruteForceN = 28;
inline constexpr double kMaxBruteForceItems = 2e8;

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitNumeric = 3,
  kExitMismatch = 4,
};

// Runs one command line (without the program name).  Reports go to `out`,
// diagnostics to `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace comppat
