#pragma once

// The ssvtool command line: subcommands over documents on disk with
// deterministic text or JSON reports.

#include <iosfwd>
#include <string>
#include <vector>

namespace ssv {

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // the computation found a defect
inline constexpr int kExitUsage = 2;    // bad arguments or unreadable input

/// Runs one command. `args` excludes the program name; `in` is read by snf.
/// The report goes to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ssv
