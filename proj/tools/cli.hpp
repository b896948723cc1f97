#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bkcoord::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kValidationFailure = 2,
    kInvariantViolation = 3,
};

/// Runs the command line `args` (args[0] is the program name). Documents go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bkcoord::cli
