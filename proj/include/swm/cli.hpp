#pragma once

#include <ostream>

namespace swm {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

/// Parses argv (argv[0] is the program name) and runs one subcommand:
/// coeffs, matrix, eigen, hypregion, steady, simulate, compare.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swm
