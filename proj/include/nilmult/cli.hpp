#pragma once

// Command-line front end. Exit codes: 0 success, 1 computation refused
// (resource ceiling, class not covered), 2 usage or parse error.

#include <ostream>
#include <string>
#include <vector>

namespace nilmult::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace nilmult::cli
