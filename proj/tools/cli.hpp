#pragma once

#include <iosfwd>

namespace ultragraph::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    ok = 0,           // affirmative verdict or plain success
    negative = 1,     // valid input, negative verdict
    input_error = 2,  // unreadable, malformed or precondition-violating input
    self_check = 3,   // an internal consistency check failed
};

/// Runs one invocation of the `ultragraph` command line, writing results to
/// `out` and diagnostics/progress to `err`. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ultragraph::cli
