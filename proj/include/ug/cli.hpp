#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ug {

// Runs one CLI invocation (without the program name). Writes the JSON or text
// report to `out` and error messages to `err`.
// Returns 0 when all checks pass, 1 on a check failure, 2 on bad input/usage.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace ug
