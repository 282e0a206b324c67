#include <gtest/gtest.h>

#include "heis/error.hpp"
#include "heis/linalg.hpp"

using namespace heis;

namespace {

// every element of u_n(F_q), as matrices
std::vector<StrictUpperMatrix> all_matrices(const FieldPtr& f, int n) {
  const std::size_t N = StrictUpperMatrix::size_for(n);
  std::vector<StrictUpperMatrix> out;
  std::vector<Code> e(N, 0);
  for (;;) {
    out.emplace_back(f, n, e);
    std::size_t k = 0;
    while (k < N && ++e[k] == f->order()) e[k++] = 0;
    if (k == N) break;
  }
  return out;
}

Functional F(const FieldPtr& f, int n, std::vector<std::tuple<int, int, int>> terms) {
  StrictUpperMatrix m(f, n);
  for (auto [i, j, t] : terms) m.set(i, j, static_cast<Code>(t));
  return Functional(m);
}

}  // namespace

TEST(StrictUpper, IndexRoundTrip) {
  for (int n = 1; n <= 9; ++n)
    for (std::size_t k = 0; k < StrictUpperMatrix::size_for(n); ++k) {
      auto [i, j] = StrictUpperMatrix::position(n, k);
      EXPECT_LT(i, j);
      EXPECT_EQ(StrictUpperMatrix::index(n, i, j), k);
    }
}

TEST(StrictUpper, RejectsDiagonal) {
  StrictUpperMatrix m(Field::make(3), 4);
  EXPECT_THROW(m.set(2, 2, 1), DomainError);
  EXPECT_THROW(m.set(3, 1, 1), DomainError);
  EXPECT_THROW(m.set(1, 2, 3), DomainError);
  EXPECT_EQ(m.at(3, 1), 0);
}

TEST(Group, InverseExample) {
  auto f = Field::make(3);
  StrictUpperMatrix x(f, 3);
  x.set(1, 2, 1);
  x.set(2, 3, 1);
  const auto inv = group_inv(UnitriangularElement(x));
  StrictUpperMatrix expect(f, 3);
  expect.set(1, 2, 2);
  expect.set(2, 3, 2);
  expect.set(1, 3, 1);
  EXPECT_EQ(inv.above(), expect);
}

TEST(Group, OrderAndInverses) {
  for (auto [n, q] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
    auto f = Field::make(q);
    const auto all = all_matrices(f, n);
    std::size_t expected = 1;
    for (int k = 0; k < n * (n - 1) / 2; ++k) expected *= q;
    EXPECT_EQ(all.size(), expected);
    const auto id = UnitriangularElement::identity(f, n);
    for (const auto& x : all) {
      UnitriangularElement g(x);
      EXPECT_EQ(group_mul(g, group_inv(g)), id);
      EXPECT_EQ(group_mul(group_inv(g), g), id);
    }
  }
}

TEST(Group, SigmaIsAHomomorphism) {
  auto f = Field::make(3);
  const auto all = all_matrices(f, 3);
  for (const auto& a : all)
    for (const auto& b : all) {
      UnitriangularElement g(a), h(b);
      EXPECT_EQ(sigma(group_mul(g, h)), f->add(sigma(g), sigma(h)));
    }
}

TEST(Action, LeftExampleOverF2) {
  // (g.l)(e12) = l((1+e23) e12) = l(e12) = 0, so g.e*13 = e*13 for g = 1 + e23
  auto f = Field::make(2);
  const auto lambda = Functional::dual(f, 3, 1, 3);
  const UnitriangularElement g(StrictUpperMatrix::elementary(f, 3, 2, 3));
  EXPECT_EQ(act(Action::left, g, lambda), lambda);
  // (l.g)(e12) = l(e12 (1+e23)) = l(e12 + e13) = 1
  EXPECT_EQ(act(Action::right, g, lambda), F(f, 3, {{1, 3, 1}, {1, 2, 1}}));
}

TEST(Action, LeftAndRightCommuteCoadjointIsComposite) {
  for (auto [n, q] : {std::pair{3, 3}, {4, 2}}) {
    auto f = Field::make(q);
    const auto all = all_matrices(f, n);
    const std::vector<std::size_t> picks{0, 1, 5, 17, all.size() - 1};
    for (auto gi : picks)
      for (auto hi : picks)
        for (std::size_t li = 0; li < all.size(); li += 3) {
          UnitriangularElement g(all[gi % all.size()]), h(all[hi % all.size()]);
          Functional l(all[li]);
          EXPECT_EQ(act(Action::right, h, act(Action::left, g, l)), act(Action::left, g, act(Action::right, h, l)));
          EXPECT_EQ(act(Action::coadjoint, g, l), act(Action::right, group_inv(g), act(Action::left, g, l)));
          // actions, not just maps
          EXPECT_EQ(act(Action::left, group_mul(g, h), l), act(Action::left, g, act(Action::left, h, l)));
          EXPECT_EQ(act(Action::right, group_mul(g, h), l), act(Action::right, h, act(Action::right, g, l)));
        }
  }
}

TEST(Ideals, Positions) {
  EXPECT_EQ(ideal_positions(5, 3), (std::vector<std::pair<int, int>>{{1, 4}, {1, 5}, {2, 5}}));
  EXPECT_EQ(ideal_positions(4, 1).size(), 6u);
}

TEST(Ideals, PowersOfTheAlgebra) {
  // n^k is spanned by products of k elements
  auto f = Field::make(2);
  const int n = 5;
  for (int k = 1; k <= 4; ++k) {
    const auto pos = ideal_positions(n, k);
    for (auto [i, j] : pos) {
      StrictUpperMatrix prod = StrictUpperMatrix::elementary(f, n, i, i + 1);
      for (int s = i + 1; s < j; ++s) prod = prod * StrictUpperMatrix::elementary(f, n, s, s + 1);
      EXPECT_EQ(prod, StrictUpperMatrix::elementary(f, n, i, j));
      EXPECT_GE(j - i, k);
    }
  }
}

TEST(UpperForm, DropsFirstColumnAndLastRow) {
  auto f = Field::make(5);
  StrictUpperMatrix x(f, 4);
  Code v = 1;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) x.set(i, j, v++ % 5);
  const auto u = upper_form(x);
  ASSERT_EQ(u.size, 3);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) EXPECT_EQ(u.at(a, b), b >= a ? x.at(a, b + 1) : 0);
  EXPECT_EQ(from_upper_form(f, u), x);
}

TEST(Blocks, ZeroFunctional) {
  const auto blocks = block_decomposition(Functional::zero(Field::make(2), 5));
  ASSERT_EQ(blocks.size(), 4u);
  for (const auto& b : blocks) EXPECT_EQ(b, SquareMatrix(1));
}

TEST(Blocks, WorkedEightByEight) {
  auto f = Field::make(7);
  const Code r = 1, s = 2, t = 3, u = 4, v = 5;
  const auto lambda = F(f, 8, {{1, 3, r}, {4, 5, s}, {4, 6, t}, {5, 7, u}, {7, 8, v}});
  const auto blocks = block_decomposition(lambda);
  ASSERT_EQ(blocks.size(), 4u);
  EXPECT_EQ(blocks[0].size, 2);
  EXPECT_EQ(blocks[1].size, 1);
  EXPECT_EQ(blocks[2].size, 3);
  EXPECT_EQ(blocks[3].size, 1);
  EXPECT_EQ(blocks[0].data, (std::vector<Code>{0, r, 0, 0}));
  EXPECT_EQ(blocks[1].data, (std::vector<Code>{0}));
  EXPECT_EQ(blocks[2].data, (std::vector<Code>{s, t, 0, 0, 0, u, 0, 0, 0}));
  EXPECT_EQ(blocks[3].data, (std::vector<Code>{v}));
}

TEST(Blocks, ReconstructAndMaximal) {
  auto f = Field::make(2);
  const int n = 5;
  for (const auto& x : all_matrices(f, n)) {
    const Functional l(x);
    const auto blocks = block_decomposition(l);
    EXPECT_EQ(from_upper_form(f, block_diagonal(blocks)), x);
    // no block splits further
    for (const auto& b : blocks) {
      const auto sub = block_decomposition(Functional(from_upper_form(f, b)));
      EXPECT_EQ(sub.size(), 1u);
    }
  }
}

TEST(Serialization, RoundTrip) {
  auto f = Field::make(4);
  const auto l = F(f, 4, {{1, 2, 3}, {2, 4, 1}});
  EXPECT_EQ(serialize(l), "4 4 3 0 0 0 1 0");
  EXPECT_EQ(parse_functional(serialize(l)), l);
  EXPECT_EQ(pretty(l), "3*e(1,2) + e(2,4)");
  EXPECT_THROW(parse_functional("3 2 1 1"), ParseError);
  EXPECT_THROW(parse_functional("3 2 1 1 x"), ParseError);
  EXPECT_THROW(parse_functional("3 2 1 1 2"), ParseError);
}
