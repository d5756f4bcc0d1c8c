#ifndef BNALG_CLI_HPP
#define BNALG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bnalg {

/// Runs one command line (without the program name). The report is written
/// to `out` in one piece on success; diagnostics go to `err`. Returns 0 on
/// success, 1 on invalid input or a failed precondition, 2 when a size guard
/// is exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bnalg

#endif  // BNALG_CLI_HPP
