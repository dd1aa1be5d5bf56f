#pragma once

#include <ostream>

namespace eitlab::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitPhysics = 3;

// Whole command line: parse, run, write. Never throws; the return value is
// the process exit code. Summaries go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eitlab::harness
