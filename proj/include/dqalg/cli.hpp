#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dq::cli {

/// Exit statuses of `run`.
enum Exit : int { kOk = 0, kDomainError = 1, kInputError = 2 };

/// Name of the environment variable that overrides the brute-force budget.
inline constexpr const char* kBudgetEnv = "DQALG_BRUTE_FORCE_BUDGET";

/// Runs one invocation; `args` excludes the program name. JSON results and
/// error objects go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dq::cli
