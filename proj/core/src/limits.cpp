#include "heis/limits.hpp"

#include <cstdlib>
#include <string>

#include "heis/error.hpp"

namespace heis {

bool size_guard_enabled() {
  const char* v = std::getenv("HEIS_NO_SIZE_GUARD");
  return !(v && *v && std::string(v) != "0");
}

std::uint64_t max_space_points() {
  if (const char* v = std::getenv("HEIS_MAX_SPACE"); v && *v) {
    try {
      return std::stoull(v);
    } catch (const std::exception&) {
    }
  }
  return std::uint64_t{1} << 24;
}

void check_enumeration_size(const char* what, int n, int bound) {
  if (size_guard_enabled() && n > bound)
    throw SpaceTooLarge(std::string(what) + ": n = " + std::to_string(n) + " exceeds the advisory bound " +
                        std::to_string(bound) + " (set HEIS_NO_SIZE_GUARD=1 to override)");
}

}  // namespace heis
