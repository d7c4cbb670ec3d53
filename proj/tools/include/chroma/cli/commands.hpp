#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chroma::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

// Runs one subcommand. `args` excludes the program name. Primary output goes
// to `out` (or to the --out file); diagnostics and heartbeats go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker thread cap: CHROMA_THREADS if set and positive, else hardware threads.
unsigned thread_cap();

}  // namespace chroma::cli
