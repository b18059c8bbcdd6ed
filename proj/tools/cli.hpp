#ifndef HYPERB_TOOLS_CLI_HPP
#define HYPERB_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hyperb::cli {

/// Runs the command line `args` (without the program name). Returns the exit
/// code: 0 on success, 1 on parse errors, 2 on precondition violations (with
/// an `ERR <code> <detail>` line on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperb::cli

#endif  // HYPERB_TOOLS_CLI_HPP
