#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace guinand::cli {

/// Exit codes: 0 all checks within tolerance, 2 a residual exceeded its
/// tolerance, 1 usage, parse, or work-cap errors.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kResidual = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace guinand::cli
