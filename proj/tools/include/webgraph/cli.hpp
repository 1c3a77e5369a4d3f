#pragma once

#include <iosfwd>

namespace webgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitNumeric = 4;
inline constexpr int kExitInternal = 1;

/// Entry point of the `webgraph` tool. Results go to `out`, diagnostics to
/// `err`; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace webgraph::cli
