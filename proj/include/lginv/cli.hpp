#pragma once

#include "lginv/reversion.hpp"

namespace lginv::cli {

// Exit codes: 0 when every checked identity holds, 1 when any cell
// mismatches, 2 for input or usage errors.
inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

int exit_code_for(const VerificationReport& report);

// Full command dispatch; never throws. Writes results to stdout and
// diagnostics to stderr.
int run(int argc, const char* const* argv);

}  // namespace lginv::cli
