#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superdix {

/// Exit codes: 0 success or true, 1 false or distinct, 2 inconclusive, 3 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superdix
