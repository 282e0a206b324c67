#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "heis/chains.hpp"
#include "heis/orbits.hpp"
#include "heis/truncated_group.hpp"

namespace heis::oracle {

// A space together with its orbit census (the census points into the space).
class SpaceCensus {
 public:
  SpaceCensus(FieldPtr f, int n, DualSpace::Kind kind, Mode mode)
      : space_(std::make_unique<DualSpace>(std::move(f), n, kind)), census_(*space_, mode) {}
  const DualSpace& space() const noexcept { return *space_; }
  const OrbitCensus& census() const noexcept { return census_; }

 private:
  std::unique_ptr<DualSpace> space_;
  OrbitCensus census_;
};

// Two-sided orbits of the space, flagged irreducible when |G.l cap l.G| = 1.
struct SuperOrbit {
  PointCode rep;
  std::uint64_t size;
  std::uint64_t left_size;
  std::uint64_t intersection;
  bool irreducible() const noexcept { return intersection == 1; }
};
std::vector<SuperOrbit> super_orbits(const SpaceCensus& c);

// Coadjoint orbits of the Heisenberg subspace with the xi statistics of each.
struct XiOrbit {
  PointCode rep;
  std::uint64_t size;
  XiStats stats;
};
std::vector<XiOrbit> xi_orbits(const SpaceCensus& c);

struct SupercharacterCounts {
  std::uint64_t supercharacters = 0;
  std::uint64_t irreducible_supercharacters = 0;
  std::uint64_t heisenberg_supercharacters = 0;  // irreducible, kernel containing 1 + n^3
};
SupercharacterCounts count_supercharacter_families(int n, int q, GroupKind group);

enum class HeisMethod { quotient_classes, xi_census };
struct HeisenbergCount {
  std::uint64_t count = 0;
  std::map<int, std::uint64_t> degree_histogram;  // exponent e -> characters of degree q^e (xi_census)
};
// xi_census is available for the full group only.
HeisenbergCount count_heisenberg_characters(int n, int q, HeisMethod method, GroupKind group = GroupKind::full);

enum class CInvKind { supercharacters, irreducible_supercharacters, heisenberg_supercharacters, heisenberg_characters };
std::string to_string(CInvKind k);
// C-invariant objects of U_n(F_q) (n is the matrix size).
std::uint64_t count_c_invariant(int n, int q, CInvKind kind);

// Number of distinct orbits among l + t gamma, t in F_q.
std::uint64_t c_orbit_size(const SpaceCensus& c, PointCode point);

// Tuples t in (F_q^x)^(2d) with l_t + gamma in the coadjoint orbit of
// l_t = sum t_i e*_{i,i+2}, inside u_{2d+2}.
std::uint64_t tech_lem1_bruteforce(int d, int q);

}  // namespace heis::oracle
