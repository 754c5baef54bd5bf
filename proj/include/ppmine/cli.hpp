#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppmine::cli {

enum ExitCode : int {
    kSuccess = 0,
    kMismatch = 1,
    kUsageError = 2,
    kInputError = 3,
};

/// Entry point of the ppmine tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ppmine::cli
