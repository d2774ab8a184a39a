#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace patternsort {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Runs one command line (without the program name). The report goes to `out`, or to
/// the file named by --out; diagnostics and help for usage errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace patternsort
