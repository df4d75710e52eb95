#pragma once

#include <ostream>

namespace cyclodiv {

enum ExitCode : int {
    exit_ok = 0,
    exit_parse_error = 2,
    exit_precondition = 3,
    exit_inconclusive = 4,
    exit_invariant = 5,
};

/// Entry point of the command-line tool; reports go to `out`, diagnostics
/// to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cyclodiv
