#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homgraph::cli {

enum ExitCode : int {
  ok = 0,
  usage = 1,
  cap_exceeded = 2,
  inconsistency = 3,
};

/// Runs one command line (args excludes the program name). Output is
/// buffered and written to `out` only after the command finishes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homgraph::cli
