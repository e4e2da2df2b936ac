#pragma once

// Command-line front end. `run` is the whole program minus process exit, so
// tests can drive it in-process.
//
// Exit codes: 0 success, 2 invalid configuration (nothing is computed or
// written), 3 numerical or module failure (message printed verbatim).

namespace dicke::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

int run(int argc, const char* const* argv);

}  // namespace dicke::cli
