#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surfgeo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Runs one command; `args` excludes the program name. Output is exact and
// byte-for-byte deterministic for fixed arguments and catalog contents.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfgeo::cli
