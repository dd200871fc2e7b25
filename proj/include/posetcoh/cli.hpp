#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace posetcoh {

/// Runs one command line (without the program name).
/// Exit codes: 0 affirmative, 1 negative or mismatch, 2 input error, 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posetcoh
