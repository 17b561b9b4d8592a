#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lbforge::cli {

/// Process exit codes.
enum ExitCode : int {
  kPass = 0,
  kCheckFailure = 1,
  kInvalidConfig = 2,
  kIoError = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lbforge::cli
