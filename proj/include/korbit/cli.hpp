#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace korbit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitIncoherent = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitMalformed = 65;
inline constexpr int kExitTooLarge = 66;

/// Largest m accepted by the `slice` subcommand.
inline constexpr int kMaxSliceM = 10;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace korbit::cli
