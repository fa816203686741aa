#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzdir::cli {

/// Runs the fuzzdir command line. args excludes the program name.
/// Exit codes: 0 success, 1 negative answer under --fail-if-not, 2 input or
/// usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzdir::cli
