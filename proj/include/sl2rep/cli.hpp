#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2rep {

// Exit codes: 0 success, 1 error, 2 heuristic "Inconclusive" verdict.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl2rep
