#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "heis/space.hpp"

namespace heis::oracle {

std::string to_string(Mode m);
Mode parse_mode(const std::string& name);

// BFS closure of one point; throws SpaceTooLarge past max_space_points().
std::vector<PointCode> orbit_codes(const DualSpace& space, PointCode seed, Mode mode);
std::unordered_set<PointCode> orbit_set(const DualSpace& space, PointCode seed, Mode mode);

// Orbit of lambda in the whole of u_n^* under U_n, sorted by point code.
std::vector<Functional> orbit(const Functional& lambda, Mode mode);

struct OrbitInfo {
  PointCode rep;  // smallest code in the orbit
  std::uint64_t size;
};

// Every orbit of a space, found by sweeping codes upward.
class OrbitCensus {
 public:
  OrbitCensus(const DualSpace& space, Mode mode);

  const DualSpace& space() const noexcept { return *space_; }
  Mode mode() const noexcept { return mode_; }
  const std::vector<OrbitInfo>& orbits() const noexcept { return orbits_; }
  std::uint64_t total() const noexcept { return space_->size(); }
  std::uint32_t orbit_of(PointCode c) const { return id_[c]; }
  std::vector<PointCode> members(std::uint32_t orbit) const;

 private:
  const DualSpace* space_;
  Mode mode_;
  std::vector<std::uint32_t> id_;
  std::vector<OrbitInfo> orbits_;
};

// |G.l cap l.G| for the point (under the space's group)
std::uint64_t left_right_intersection(const DualSpace& space, PointCode c);

}  // namespace heis::oracle
