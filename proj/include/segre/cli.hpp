#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segre {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitGenericityFailure = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segre
