#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace godp {

// Exit statuses of the command-line driver.
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

// Runs `godpc` with the given arguments (program name excluded), writing
// reports to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace godp
