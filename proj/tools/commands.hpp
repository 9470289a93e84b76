#ifndef GIC_TOOLS_COMMANDS_HPP
#define GIC_TOOLS_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gic::cli {

/// Parses and runs one full command line (without the program name).
/// Exit codes: 0 success, 1 verification or computation failure, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gic::cli

#endif  // GIC_TOOLS_COMMANDS_HPP
