#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace merexp::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int
{
	kSuccess = 0,
	kFailure = 1,    // verification failure or internal invariant violation
	kUsage = 2,      // bad arguments
	kBoundExceeded = 3,
};

/// Environment variable overriding the Mersenne factoring bound.
inline constexpr const char *kFactorBoundEnv = "MEREXP_FACTOR_BOUND";

/// Runs the tool with args (program name excluded), writing results to out
/// and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace merexp::cli
