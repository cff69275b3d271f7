#pragma once

#include "dehn/report.hpp"

#include <string>
#include <vector>

namespace dehn {

struct CommandOutcome {
  std::string out;  // report text or help
  std::string err;  // diagnostics
  int exit_code = 0;
};

/// Runs one dehncalc invocation (arguments without the program name).
/// Exit codes: 0 ok, 1 a check failed, 2 usage or input error, 3 only indeterminate outcomes.
CommandOutcome run_command(const std::vector<std::string>& args);

}  // namespace dehn
