#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mqtlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Manual page assembled from the same command definitions as run_cli.
std::string manual();

}  // namespace mqtlab::cli
