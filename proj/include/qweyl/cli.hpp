#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qweyl::cli {

/// Runs one command line (args excludes the program name).
/// Exit codes: 0 success, 1 verification failure, 2 malformed arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qweyl::cli
