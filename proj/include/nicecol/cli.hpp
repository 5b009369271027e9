// cli.hpp -- command-line entry point, callable in-process for tests

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nicecol {

/// Exit codes: 0 success / colorable, 1 negative answer, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nicecol
