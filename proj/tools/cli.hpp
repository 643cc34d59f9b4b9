#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matchpow::cli {

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name), writing to
/// out and err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matchpow::cli
