#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace gasprint::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit status.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gasprint::cli
