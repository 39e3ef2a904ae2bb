#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pieri::cli {

enum ExitCode : int { ok = 0, usage = 1, domain = 2, verification = 3 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pieri::cli
