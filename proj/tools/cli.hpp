#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace verlinde::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// hash over the library and tool sources at configure time
std::string code_version();

}  // namespace verlinde::cli
