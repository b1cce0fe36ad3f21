// cli.hpp — command dispatch for the transmon tool; main() forwards here.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace transmon::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationFailure = 2,
    kSolverFailure = 3,
    kIoFailure = 4,
};

/// args excludes the program name. Configuration precedence: built-in defaults, then the
/// --config file, then individual flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transmon::cli
