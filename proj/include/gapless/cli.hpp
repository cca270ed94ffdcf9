// Command-line front end.  Exit codes: 0 ok, 1 verification failure or
// runtime error, 2 parse error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gapless {

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gapless
