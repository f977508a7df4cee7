#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hermgeo::io {

/// Runs the command line `args` (args[0] is the program name). Exit codes:
/// 0 success, 1 geometric or regime error, 2 malformed input or usage.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hermgeo::io
