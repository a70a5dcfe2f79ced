#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ultra::cli {

/// Exit codes. Boolean subcommands use kTrue/kFalse; everything else
/// returns kTrue on success.
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kError = 2;

/// Environment variable overriding the `enumerate` size limit.
inline constexpr const char* kEnumLimitEnv = "ULTRA_ENUM_MAX";

/// Runs one invocation; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ultra::cli
