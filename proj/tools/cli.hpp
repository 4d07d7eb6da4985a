#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scindex::cli {

/// Process exit codes. Exhaustive and disjoint.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kValidation = 3,
    kIo = 4,
};

/// Runs one invocation. `args` excludes the program name. Documents go to
/// `out`, diagnostics to `err`; `in` backs `--input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace scindex::cli
