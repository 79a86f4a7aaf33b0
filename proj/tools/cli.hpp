#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biclust {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 on a usage error and 2 when solving or reading input fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biclust
