#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace jindex {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitUsage = 1, kExitData = 2 };

/// Runs one command line. `args` excludes the program name. Reports go to
/// `out`, diagnostics and usage text to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace jindex
