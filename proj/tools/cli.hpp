#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace molex::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs the command line with the given arguments (without the program
/// name). Graph input named "-" is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace molex::cli
