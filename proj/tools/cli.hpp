#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homquot::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 input error, 2 hypothesis violation, 3 internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homquot::cli
