#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parking::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    ok = 0,           // success / verified
    negative = 1,     // valid input, negative result (failed to park, mismatch)
    usage = 2,
    over_budget = 3,
};

// Runs the command line `args` (args[0] is the program name), writing results
// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parking::cli
