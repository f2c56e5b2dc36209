#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qdn::cli {

enum ExitCode { Success = 0, DomainError = 1, UsageError = 2, BudgetExceeded = 3 };

/// Runs one command line (without the program name). Human output by
/// default; --json switches to one JSON record per line.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qdn::cli
