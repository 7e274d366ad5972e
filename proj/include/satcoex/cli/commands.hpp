#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace satcoex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitItuWarning = 2;

// Entry point of the `satcoex` tool; args excludes the program name.
// Subcommands: geometry, sweep-slant, sweep-separation, min-separation,
// channel-stats.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satcoex::cli
