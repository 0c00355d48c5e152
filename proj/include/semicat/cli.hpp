#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semicat {

/// Runs the command line (without the program name). Exit codes: 0 success,
/// 1 law violation, 2 usage or input error. Output is written in one piece.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semicat
