#pragma once

#include <iosfwd>

namespace lcg::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_inequivalent = 1;  // also: a check requested with --verify/--expect failed
inline constexpr int exit_indeterminate = 2;
inline constexpr int exit_cap = 3;
inline constexpr int exit_usage = 64;
inline constexpr int exit_parse = 65;
inline constexpr int exit_io = 66;
inline constexpr int exit_internal = 70;

/// Runs one command line. Human-readable output goes to `out`, diagnostics
/// (prefixed "error: <code>:") to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lcg::cli
