#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kempe::cli {

/// Process exit codes.
enum ExitCode : int {
    kVerified = 0,
    kViolation = 1,
    kCapped = 2,
    kBadInput = 3,
    kInternalError = 4,
};

/// Runs one command line (without the program name). `in` backs the `-`
/// graph argument and stream input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace kempe::cli
