#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace geomkit::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 the answer is "infeasible / not found", 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geomkit::cli
