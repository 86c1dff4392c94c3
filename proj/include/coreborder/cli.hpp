#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coreborder::cli {

/// Exit codes of run().
enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kDataError = 2,
    kIoError = 3,
};

/// Runs one invocation. `args` excludes the program name. Reports and data
/// go to files or `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace coreborder::cli
