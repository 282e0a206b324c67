#include <gtest/gtest.h>

#include "heis/census.hpp"
#include "heis/chains.hpp"
#include "heis/orbits.hpp"

using namespace heis;
using namespace heis::oracle;

namespace {

std::uint64_t qpow(int q, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= static_cast<std::uint64_t>(q);
  return r;
}

}  // namespace

TEST(Chains, ZeroFunctional) {
  auto f = Field::make(3);
  const auto r = ls_chain(Functional::zero(f, 4));
  EXPECT_EQ(r.l_chain[1].dim(), 6u);
  EXPECT_EQ(r.l_bar(), r.s_bar());
  const auto x = xi_stats(Functional::zero(f, 4));
  EXPECT_EQ(x.degree_exponent, 0);
  EXPECT_TRUE(x.irreducible);
}

TEST(Chains, SingleDiagonalStep) {
  auto f = Field::make(2);
  const auto x = xi_stats(Functional::dual(f, 3, 1, 3));
  EXPECT_EQ(x.degree_exponent, 1);
  EXPECT_TRUE(x.irreducible);
  EXPECT_EQ(ls_chain(Functional::dual(f, 3, 1, 3)).l_bar().dim(), 2u);
}

TEST(Chains, TechLemDisplay) {
  // l = e*_{13} + e*_{24} + e*_{35}: l^1 kills the superdiagonal (1,2),(2,3),(3,4); s^1 only (3,4)
  auto f = Field::make(3);
  StrictUpperMatrix m(f, 5);
  m.set(1, 3, 1);
  m.set(2, 4, 2);
  m.set(3, 5, 1);
  const auto r = ls_chain(Functional(m));
  ASSERT_GE(r.l_chain.size(), 2u);
  const auto& l1 = r.l_chain[1];
  const auto& s1 = r.s_chain[1];
  EXPECT_EQ(l1.dim(), 10u - 3u);
  EXPECT_EQ(s1.dim(), 10u - 1u);
  for (int i = 1; i <= 3; ++i) EXPECT_FALSE(l1.contains(as_vector(StrictUpperMatrix::elementary(f, 5, i, i + 1))));
  EXPECT_TRUE(l1.contains(as_vector(StrictUpperMatrix::elementary(f, 5, 4, 5))));
  EXPECT_FALSE(s1.contains(as_vector(StrictUpperMatrix::elementary(f, 5, 3, 4))));
  EXPECT_TRUE(s1.contains(as_vector(StrictUpperMatrix::elementary(f, 5, 1, 2))));
  EXPECT_EQ(r.l_bar(), r.s_bar());
}

class FullSweep : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FullSweep, InclusionsClosureAndOrbitSizes) {
  const auto [n, q] = GetParam();
  auto f = Field::make(q);
  SpaceCensus left(f, n, DualSpace::Kind::full, Mode::left);
  const std::size_t N = StrictUpperMatrix::size_for(n);
  for (PointCode c = 0; c < left.space().size(); ++c) {
    const auto l = left.space().functional(c);
    const auto r = ls_chain(l);
    ASSERT_EQ(r.l_chain.size(), r.s_chain.size());
    EXPECT_EQ(r.l_chain.front().dim(), 0u);
    EXPECT_EQ(r.s_chain.front().dim(), N);
    for (std::size_t i = 0; i + 1 < r.l_chain.size(); ++i) {
      EXPECT_TRUE(r.l_chain[i + 1].contains(r.l_chain[i]));
      EXPECT_TRUE(r.s_chain[i].contains(r.s_chain[i + 1]));
    }
    EXPECT_TRUE(r.s_bar().contains(r.l_bar()));
    for (const auto& s : r.l_chain) EXPECT_TRUE(is_subalgebra(s, n));
    for (const auto& s : r.s_chain) EXPECT_TRUE(is_subalgebra(s, n));
    // |G l| = |n| / |l^1| and |G l cap l G| = |s^1| / |l^1|
    const auto lsize = left.census().orbits()[left.census().orbit_of(c)].size;
    EXPECT_EQ(lsize, qpow(q, N - r.l_chain[1].dim())) << pretty(l);
    EXPECT_EQ(left_right_intersection(left.space(), c), qpow(q, r.s_chain[1].dim() - r.l_chain[1].dim()))
        << pretty(l);
  }
}

INSTANTIATE_TEST_SUITE_P(Small, FullSweep, ::testing::Values(std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 2}));
