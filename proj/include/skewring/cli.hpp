#ifndef SKEWRING_CLI_HPP
#define SKEWRING_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace skewring::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one command. `args` excludes the program name. Returns the process
/// exit status: 0 success, 1 mathematical impossibility (NotInvertible,
/// NotRightDivisor, BudgetExceeded, ...), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewring::cli

#endif  // SKEWRING_CLI_HPP
