#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evoternary {

/// Exit-code contract, fixed for CI use.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInvariant = 3;
inline constexpr int kExitVerification = 4;
inline constexpr int kExitBound = 5;
inline constexpr int kExitPerfectRequired = 6;

/// Runs the command line given as argv-style arguments (program name
/// excluded). In-process entry point so tests can drive the CLI directly.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evoternary
