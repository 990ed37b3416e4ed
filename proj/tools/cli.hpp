#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lucas::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kDisproved = 1, kError = 2 };

/// Runs the command line `args` (args[0] is the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lucas::cli
