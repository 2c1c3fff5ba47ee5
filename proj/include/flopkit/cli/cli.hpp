#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flopkit {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses args (without the program name), runs the command and writes its output. Returns 0 when
/// every check passed, 1 on a failed check or a degenerate input, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flopkit
