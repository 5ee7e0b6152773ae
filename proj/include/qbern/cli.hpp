#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbern {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_usage = 2, exit_failure = 3 };

/// Runs one command line (args excludes the program name). Results go to
/// `out`, messages to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbern
