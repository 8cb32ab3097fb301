#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quadorbit::cli {

enum ExitCode : int {
    Pass = 0,
    Fail = 1,
    Usage = 2,
    BudgetExhausted = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadorbit::cli
