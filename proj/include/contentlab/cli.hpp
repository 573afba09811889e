#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace contentlab {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace contentlab
