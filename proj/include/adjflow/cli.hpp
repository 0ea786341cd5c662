#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adjflow {

/**
 * Parses and executes one command line (without the program name) and
 * returns the process exit code: 0 on success, 2 on an input error,
 * 3 when a numerical guard (overflow) tripped.  Reports go to `out`,
 * diagnostics to `err`.
 */
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

} // namespace adjflow
