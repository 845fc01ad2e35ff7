#pragma once

#include <string>
#include <vector>

namespace solcon::cli {

enum class Status { ok, error, theorem_violation };

/// Exit codes: 0 ok, 1 usage or input error, 2 budget exceeded,
/// 3 theorem violation.
struct CommandResult {
  Status status = Status::ok;
  std::string payload;
  int exit_code = 0;
};

/// Runs one command line (without the program name). Never throws; errors
/// become a JSON object {code, message, context}.
CommandResult run(const std::vector<std::string>& args);

}  // namespace solcon::cli
