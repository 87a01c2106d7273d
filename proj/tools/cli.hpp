#pragma once

#include <iosfwd>

namespace cbias::cli {

// Process exit codes. Stable; listed in --help.
enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_usage = 2,
    exit_hypothesis = 3,
    exit_best_effort = 4,
    exit_theorem_violation = 5,
    exit_size_guard = 6,
};

/// Runs one command line. Everything the command prints goes to `out`
/// (or the --output/--cycle-out files); diagnostics go to `err`.
int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

} // namespace cbias::cli
