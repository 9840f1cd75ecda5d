#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ehrq::cli {

// Runs one CLI invocation (argv without the program name). Exit codes:
// 0 success / all checks pass, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ehrq::cli
