#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heyland::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kInputError = 2,
    kDegenerateGeometry = 3,
    kInfeasibleQuery = 4,
    kIoError = 5,
    kValidationBreach = 6,
};

/// Entry point shared by `main` and the tests. Reports go to `out` unless a
/// command writes to a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with arguments excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace heyland::cli
