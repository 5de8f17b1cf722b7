#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace linespec::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    ok = 0,
    theorem_violation = 1,
    usage_error = 2,
    io_error = 3,
};

/// Runs one command line (args excludes the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace linespec::cli
