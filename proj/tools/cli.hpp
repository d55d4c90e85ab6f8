// Command-line front end: subcommands check, hh, bv, bracket, twist,
// verify-bv-tensor and example.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twistbv::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2, kSizeRefusal = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistbv::cli
