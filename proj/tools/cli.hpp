#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hororadon::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kQuadrature = 3 };

// data goes to `out`, diagnostics to `err`; returns the process exit code
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hororadon::cli
