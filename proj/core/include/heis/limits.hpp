#pragma once

#include <cstdint>

namespace heis {

// Advisory bounds. HEIS_NO_SIZE_GUARD=1 disables the enumeration bounds;
// HEIS_MAX_SPACE=<points> moves the oracle bound.
inline constexpr int kMaxPartitionN = 10;
inline constexpr int kMaxPathN = 12;

bool size_guard_enabled();
std::uint64_t max_space_points();  // default 2^24
// throws SpaceTooLarge when the guard is on and n > bound
void check_enumeration_size(const char* what, int n, int bound);

}  // namespace heis
