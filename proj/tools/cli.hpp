#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmzv::cli {

enum ExitCode : int { success = 0, falsified = 1, usage_error = 2 };

/// Runs the command line given without the program name. Results go to `out`
/// (or to --out FILE), diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmzv::cli
