#ifndef BRACH_CLI_HPP
#define BRACH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace brach::cli {

/// Runs one command (solve, time, compare, residuals, sweep, plot) against
/// the given streams. Exit codes: 0 success, 2 argument or input-format
/// error, 3 numerical diagnostic (quadrature did not settle), 4 I/O
/// failure, 1 anything else.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brach::cli

#endif
