#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hgc::cli {

/// Exit statuses of the command-line tool.
enum Exit : int {
  kOk = 0,
  kDefects = 1,       // an invariant check failed, or a construction was refused
  kParseError = 2,    // unreadable workspace or bad command line
  kBudgetExceeded = 3,
};

/// Runs the tool on `args` (without the program name). The output workspace
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgc::cli
