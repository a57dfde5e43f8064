#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace artin {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,        // unreadable or malformed input
  kExitUnsupported = 3,  // context cannot answer (poisonous graph for nf, clean graph for witness)
  kExitInternal = 4,     // invariant violation
};

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artin
