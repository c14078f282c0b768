#pragma once

#include <ostream>

namespace lhl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Parses argv, runs one subcommand, writes JSON (or CSV) to out and
// diagnostics to err. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lhl::cli
