#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fwid {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// Runs one command line (program name excluded) against the built-in catalog.
/// Subcommands: list, eval, verify, roundtrip, parse-check.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fwid
