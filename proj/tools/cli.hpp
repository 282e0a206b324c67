#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "output.hpp"

namespace heis::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // a verify check failed, or an internal error
inline constexpr int kUsage = 2;
inline constexpr int kTooLarge = 3;

// "2,4-6" -> {2, 4, 5, 6}
std::vector<int> parse_range(const std::string& spec);

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heis::cli
