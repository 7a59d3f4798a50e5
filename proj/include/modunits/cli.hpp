#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modunits::cli {

/// Runs one command line (without the program name). Returns the process exit
/// code: 0 success, 1 internal failure or failed verification, 2 usage or scope error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modunits::cli
