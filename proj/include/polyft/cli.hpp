#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyft {

// Exit codes: 0 ok, 1 invalid input, 2 numerical failure, 3 case mismatch.
// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyft
