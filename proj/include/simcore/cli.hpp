#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace simcore::cli {

/// Exit codes returned by run().
enum Exit : int { ok = 0, usage = 1, infinite = 2, precondition = 3, verify_failed = 4 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err` with an "error:" prefix.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simcore::cli
