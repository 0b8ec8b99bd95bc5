#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace causerep {

// Exit codes: 0 success, 1 crosscheck found a failing equivalence,
// 2 parse/validation error, 3 enumeration or oracle budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace causerep
