#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gamelab {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitNegative = 1,
    kExitInconclusive = 2,
    kExitInputError = 3,
    kExitResource = 4,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gamelab
