#pragma once

namespace gpgame {

inline constexpr const char* kVersion = "0.1.0";

/// Seed used by the CLI and the check suites when none is given on the command line.
inline constexpr unsigned long long kDefaultSeed = 1234567891ULL;

}  // namespace gpgame
