#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace propalloc::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainFailure = 1,  // e.g. not matching covered, no perfect matching
  kUsageError = 2,     // bad flags, unreadable or malformed input
};

/// Runs one command line (args[0] is the program name). Writes exactly one
/// JSON document to `out` on exit codes 0 and 1; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace propalloc::cli
