#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rinclose {

/// Exit codes: 0 success, 1 data or I/O error, 2 usage error.
constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

/// Entry point behind the `rinclose` executable. `args` excludes the program
/// name. Subcommands: mine, generate, evaluate, report. Diagnostics go to
/// `err`; RINCLOSE_LOG=quiet silences the run summary, debug adds detail.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rinclose
