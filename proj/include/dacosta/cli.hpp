#ifndef DACOSTA_CLI_HPP
#define DACOSTA_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dacosta {

/// Exit statuses of run_cli.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // rejected, invalid, not entailed, not found
constexpr int kExitUsage = 2;     // bad arguments, unreadable or malformed input

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dacosta

#endif  // DACOSTA_CLI_HPP
