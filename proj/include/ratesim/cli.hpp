#pragma once

#include <string>
#include <vector>

namespace ratesim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;
inline constexpr int kExitReplayMismatch = 4;

// Entry point behind the `ratesim` binary. `args` excludes the program name.
// Subcommands: simulate, compare, replay.
int run_cli(const std::vector<std::string>& args);

}  // namespace ratesim
