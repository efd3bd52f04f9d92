#pragma once

#include <string>
#include <vector>

namespace compactcubic {

/// Runs the command-line tool.  args excludes the program name.
/// Exit codes: 0 ok, 1 I/O or parse error, 2 precondition violation.
int run_cli(const std::vector<std::string>& args);

} // namespace compactcubic
