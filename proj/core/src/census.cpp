#include "heis/census.hpp"

#include "heis/error.hpp"

namespace heis::oracle {

std::vector<SuperOrbit> super_orbits(const SpaceCensus& c) {
  std::vector<SuperOrbit> out;
  for (const auto& o : c.census().orbits()) {
    const auto left = orbit_set(c.space(), o.rep, Mode::left);
    const auto right = orbit_set(c.space(), o.rep, Mode::right);
    std::uint64_t k = 0;
    for (auto x : right) k += left.count(x);
    out.push_back({o.rep, o.size, left.size(), k});
  }
  return out;
}

std::vector<XiOrbit> xi_orbits(const SpaceCensus& c) {
  std::vector<XiOrbit> out;
  for (const auto& o : c.census().orbits())
    out.push_back({o.rep, o.size, xi_stats(c.space().functional(o.rep))});
  return out;
}

SupercharacterCounts count_supercharacter_families(int n, int q, GroupKind group) {
  auto f = Field::make(q);
  const bool alt = group == GroupKind::alternating;
  SupercharacterCounts r;
  SpaceCensus full(f, n, alt ? DualSpace::Kind::alt_full : DualSpace::Kind::full, Mode::two_sided);
  for (const auto& o : super_orbits(full)) {
    ++r.supercharacters;
    r.irreducible_supercharacters += o.irreducible();
  }
  SpaceCensus heis(f, n, alt ? DualSpace::Kind::alt_heisenberg : DualSpace::Kind::heisenberg, Mode::two_sided);
  for (const auto& o : super_orbits(heis)) r.heisenberg_supercharacters += o.irreducible();
  return r;
}

HeisenbergCount count_heisenberg_characters(int n, int q, HeisMethod method, GroupKind group) {
  HeisenbergCount r;
  if (method == HeisMethod::quotient_classes) {
    const auto kind = group == GroupKind::full ? GroupSpec::Kind::truncated : GroupSpec::Kind::truncated_alternating;
    r.count = conjugacy_classes({kind, n, q}).classes();
    return r;
  }
  if (group != GroupKind::full) throw DomainError("xi_census is implemented for the full group only");
  SpaceCensus c(Field::make(q), n, DualSpace::Kind::heisenberg, Mode::coadjoint);
  for (const auto& o : xi_orbits(c)) {
    if (!o.stats.irreducible) continue;
    ++r.count;
    ++r.degree_histogram[o.stats.degree_exponent];
  }
  return r;
}

std::string to_string(CInvKind k) {
  switch (k) {
    case CInvKind::supercharacters: return "supercharacters";
    case CInvKind::irreducible_supercharacters: return "irreducible_supercharacters";
    case CInvKind::heisenberg_supercharacters: return "heisenberg_supercharacters";
    case CInvKind::heisenberg_characters: return "heisenberg_characters";
  }
  return "?";
}

namespace {

bool c_invariant(const SpaceCensus& c, PointCode point) { return c_orbit_size(c, point) == 1; }

}  // namespace

std::uint64_t c_orbit_size(const SpaceCensus& c, PointCode point) {
  const auto& space = c.space();
  const Field& F = space.field();
  const int n = space.dim();
  const auto base = space.decode(point);
  std::vector<std::uint32_t> ids;
  for (Code t : F.elements()) {
    auto m = base;
    for (int i = 1; i < n; ++i) {
      auto& e = m[StrictUpperMatrix::index(n, i, i + 1)];
      e = F.add(e, t);
    }
    const auto id = c.census().orbit_of(space.encode(std::move(m)));
    bool fresh = true;
    for (auto x : ids) fresh = fresh && x != id;
    if (fresh) ids.push_back(id);
  }
  return ids.size();
}

std::uint64_t count_c_invariant(int n, int q, CInvKind kind) {
  auto f = Field::make(q);
  std::uint64_t count = 0;
  switch (kind) {
    case CInvKind::supercharacters:
    case CInvKind::irreducible_supercharacters: {
      SpaceCensus c(f, n, DualSpace::Kind::full, Mode::two_sided);
      for (const auto& o : c.census().orbits()) {
        if (!c_invariant(c, o.rep)) continue;
        if (kind == CInvKind::irreducible_supercharacters && left_right_intersection(c.space(), o.rep) != 1) continue;
        ++count;
      }
      return count;
    }
    case CInvKind::heisenberg_supercharacters: {
      SpaceCensus c(f, n, DualSpace::Kind::heisenberg, Mode::two_sided);
      for (const auto& o : c.census().orbits())
        if (c_invariant(c, o.rep) && left_right_intersection(c.space(), o.rep) == 1) ++count;
      return count;
    }
    case CInvKind::heisenberg_characters: {
      SpaceCensus c(f, n, DualSpace::Kind::heisenberg, Mode::coadjoint);
      for (const auto& o : xi_orbits(c))
        if (o.stats.irreducible && c_invariant(c, o.rep)) ++count;
      return count;
    }
  }
  return count;
}

std::uint64_t tech_lem1_bruteforce(int d, int q) {
  if (d < 1) throw DomainError("d must be >= 1");
  auto f = Field::make(q);
  const int n = 2 * d + 2;
  DualSpace space(f, n, DualSpace::Kind::full);
  const auto units = f->nonzero();
  const std::size_t u = units.size();
  std::uint64_t tuples = 1;
  for (int k = 0; k < 2 * d; ++k) tuples *= u;
  std::uint64_t count = 0;
  for (std::uint64_t c = 0; c < tuples; ++c) {
    std::vector<Code> m(space.coords(), 0);
    std::uint64_t r = c;
    for (int i = 1; i <= 2 * d; ++i) {
      m[StrictUpperMatrix::index(n, i, i + 2)] = units[r % u];
      r /= u;
    }
    auto target = m;
    for (int i = 1; i < n; ++i) target[StrictUpperMatrix::index(n, i, i + 1)] = 1;
    const auto orbit = orbit_set(space, space.encode(m), Mode::coadjoint);
    count += orbit.count(space.encode(target));
  }
  return count;
}

}  // namespace heis::oracle
