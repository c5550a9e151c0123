#pragma once

#include <iosfwd>

namespace primesteg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `primesteg` command line (embed, extract, compare, weights,
/// codebook). Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace primesteg
