#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aiforge {

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aiforge
