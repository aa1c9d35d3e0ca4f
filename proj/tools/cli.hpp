#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fuzzyopt::cli {

/// Process exit codes. Nothing else is ever returned.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,       ///< bad flags, unknown problem, unreadable/unparsable files
  kNotConverged = 2,     ///< solve/table finished with a non-converged status
  kCheckFailed = 3,      ///< check found a dominator or failed stationarity
};

/// Runs the command line `args` (args[0] is the program name). Reports go
/// to `out` unless --out redirects them; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzyopt::cli
