#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subconj {

// Runs one command-line invocation.  `args` excludes the program name.
// JSON goes to `out`, logs (with --verbose) to `err`.  Returns 0 when the
// question was decided, 2 when a budget ran out first, 1 on an input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subconj
