#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace klext {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_input = 1, exit_gated = 2, exit_internal = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klext
