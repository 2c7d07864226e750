#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trimeval::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,    // bad flags or invalid input files
    kProperty = 2, // a checked property failed
};

/// Entry point of the `trimeval` tool. `args` excludes the program name.
/// Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace trimeval::cli
