#pragma once

// Command dispatch for the zetalab executable. Kept in a library so the tests
// can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace zetalab::cli {

enum ExitCode : int {
    kSuccess = 0,
    kConfigError = 1,
    kInvalidGroup = 2,
    kNumericalFailure = 3,
};

/// Runs one invocation; args excludes the program name. Results go to `out`
/// unless --out names a file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetalab::cli
