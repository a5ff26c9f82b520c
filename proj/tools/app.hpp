#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace closedpoly::cli {

enum ExitCode : int {
    kSuccess = 0,
    kParseError = 1,
    kDomainError = 2,
    kVerificationFailure = 3,
};

/// Runs one command line (without the program name). Polynomial input "-"
/// is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace closedpoly::cli
