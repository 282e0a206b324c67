#include <gtest/gtest.h>

#include "heis/subspace.hpp"

using namespace heis;

TEST(Subspace, NullSpaceOverF3) {
  auto f = Field::make(3);
  // x + y + z = 0 in F_3^3
  const auto ns = null_space(*f, {{1, 1, 1}}, 3);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ(f->add(f->add(v[0], v[1]), v[2]), 0);
}

TEST(Subspace, CanonicalBasis) {
  auto f = Field::make(5);
  const auto a = Subspace::span(f, 3, {{1, 2, 0}, {0, 1, 1}});
  const auto b = Subspace::span(f, 3, {{1, 3, 1}, {2, 4, 0}, {1, 3, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_TRUE(a.contains(Vec{2, 4, 0}));
  EXPECT_FALSE(a.contains(Vec{0, 0, 1}));
  EXPECT_TRUE(Subspace::whole(f, 3).contains(a));
  EXPECT_FALSE(a.contains(Subspace::whole(f, 3)));
  EXPECT_TRUE(a.contains(Subspace(f, 3)));
}

TEST(Subspace, RankNullity) {
  auto f = Field::make(4);
  std::vector<Vec> rows{{1, 2, 3, 0}, {2, 3, 1, 0}, {3, 1, 2, 0}};
  const auto r = rank(*f, rows, 4);
  EXPECT_EQ(r + null_space(*f, rows, 4).size(), 4u);
}
