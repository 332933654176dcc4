#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgkt {

// Exit codes: 0 success, 1 usage error, 2 domain error, 3 budget exhaustion.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgkt
