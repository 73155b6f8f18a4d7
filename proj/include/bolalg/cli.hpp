#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bolalg {

/// Exit codes of cli_dispatch.
enum ExitCode : int { exit_pass = 0, exit_failure = 1, exit_usage = 2 };

/// Runs one subcommand. args excludes the program name. Reports go to out,
/// usage errors and diagnostics to err.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bolalg
