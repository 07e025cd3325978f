#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ahyp::cli {

/// Exit statuses of run().
enum ExitCode : int { kOk = 0, kUsageError = 1, kInternalError = 2 };

/// Runs one command line; args[0] is the program name. Output goes to `out`
/// (or to the --out file), diagnostics to `err`. Output is a pure function
/// of the arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ahyp::cli
