#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace convexcuts {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_verification = 3,
    exit_resource = 4,
};

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns an ExitCode.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convexcuts
