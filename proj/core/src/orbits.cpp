#include "heis/orbits.hpp"

#include <algorithm>
#include <deque>

#include "heis/error.hpp"
#include "heis/limits.hpp"

namespace heis::oracle {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::left: return "left";
    case Mode::right: return "right";
    case Mode::two_sided: return "two_sided";
    case Mode::coadjoint: return "coadjoint";
  }
  return "?";
}

Mode parse_mode(const std::string& name) {
  if (name == "left") return Mode::left;
  if (name == "right") return Mode::right;
  if (name == "two_sided") return Mode::two_sided;
  if (name == "coadjoint") return Mode::coadjoint;
  throw DomainError("unknown orbit mode '" + name + "'");
}

std::unordered_set<PointCode> orbit_set(const DualSpace& space, PointCode seed, Mode mode) {
  const auto cap = max_space_points();
  std::unordered_set<PointCode> seen{seed};
  std::deque<PointCode> queue{seed};
  std::vector<Code> m;
  while (!queue.empty()) {
    const PointCode c = queue.front();
    queue.pop_front();
    space.decode(c, m);
    space.for_each_neighbour(m, mode, [&](PointCode d) {
      if (seen.insert(d).second) {
        if (seen.size() > cap) throw SpaceTooLarge("orbit exceeds " + std::to_string(cap) + " points");
        queue.push_back(d);
      }
    });
  }
  return seen;
}

std::vector<PointCode> orbit_codes(const DualSpace& space, PointCode seed, Mode mode) {
  const auto s = orbit_set(space, seed, mode);
  std::vector<PointCode> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Functional> orbit(const Functional& lambda, Mode mode) {
  DualSpace space(lambda.matrix().field_ptr(), lambda.dim(), DualSpace::Kind::full);
  std::vector<Functional> out;
  for (auto c : orbit_codes(space, space.encode(lambda), mode)) out.push_back(space.functional(c));
  return out;
}

OrbitCensus::OrbitCensus(const DualSpace& space, Mode mode) : space_(&space), mode_(mode) {
  const auto cap = max_space_points();
  if (space.size() > cap)
    throw SpaceTooLarge("space of " + std::to_string(space.size()) + " points exceeds " + std::to_string(cap));
  constexpr std::uint32_t unseen = UINT32_MAX;
  id_.assign(space.size(), unseen);
  std::vector<Code> m;
  std::vector<PointCode> stack;
  for (PointCode seed = 0; seed < space.size(); ++seed) {
    if (id_[seed] != unseen) continue;
    const auto orbit = static_cast<std::uint32_t>(orbits_.size());
    std::uint64_t size = 1;
    id_[seed] = orbit;
    stack.assign(1, seed);
    while (!stack.empty()) {
      const PointCode c = stack.back();
      stack.pop_back();
      space.decode(c, m);
      space.for_each_neighbour(m, mode, [&](PointCode d) {
        if (id_[d] == unseen) {
          id_[d] = orbit;
          ++size;
          stack.push_back(d);
        }
      });
    }
    orbits_.push_back({seed, size});
  }
}

std::vector<PointCode> OrbitCensus::members(std::uint32_t orbit) const {
  std::vector<PointCode> out;
  for (PointCode c = 0; c < id_.size(); ++c)
    if (id_[c] == orbit) out.push_back(c);
  return out;
}

std::uint64_t left_right_intersection(const DualSpace& space, PointCode c) {
  const auto left = orbit_set(space, c, Mode::left);
  const auto right = orbit_set(space, c, Mode::right);
  std::uint64_t k = 0;
  for (auto x : right) k += left.count(x);
  return k;
}

}  // namespace heis::oracle
