#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cayley {

/// Runs the command-line tool on the given arguments (without argv[0]).
/// Exit status: 0 success (and suite pass for verify), 1 computational
/// failure or suite failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley
