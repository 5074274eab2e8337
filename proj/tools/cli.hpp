#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitFail = 4;
inline constexpr int kExitUsage = 64;

/// Runs one command line (without the program name). Graph arguments that are
/// omitted are read from `in`.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace splitex::cli
