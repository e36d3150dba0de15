#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcenum {

/// Exit codes: 0 success, 2 usage or validation, 3 verification failure or
/// closed-form discrepancy.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

/// args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace qcenum
