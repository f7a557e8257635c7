#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vck {

// Exit codes shared by every subcommand.
inline constexpr int kExitReduced = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitYes = 10;
inline constexpr int kExitNo = 11;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitCeiling = 65;
inline constexpr int kExitInput = 66;
inline constexpr int kExitInternal = 70;

// Environment variable that overrides the oracle vertex ceiling; --ceiling
// takes precedence over it.
inline constexpr const char* kCeilingEnv = "VCK_ORACLE_CEILING";

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vck
