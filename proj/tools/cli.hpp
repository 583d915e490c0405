#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcr::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitNotPpt = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitInternal = 70;
inline constexpr int kExitCantCreate = 73;

/// Environment variable naming a JSON config file with default
/// "tol", "cap", "seed" and "report" values.
inline constexpr const char* kConfigEnv = "QCR_CONFIG";

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcr::cli
