#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snapvar::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSeedEnvVar = "SNAPVAR_SEED";

/// Exit codes: 0 success, 1 verification/runtime failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Full dispatcher used by main() and by the in-process CLI tests.
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snapvar::cli
