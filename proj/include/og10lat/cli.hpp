#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace og10lat::cli {

/// Dispatch one command line (without the program name). Exit codes:
/// 0 success, 1 invalid input (parse or precondition), 2 mathematical
/// rejection (e.g. a degenerate lattice).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace og10lat::cli
