#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctxw::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kUnconverged = 2,
    kInvariantFailure = 3,
};

/// Entry point for the `ctxw` tool. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctxw::cli
