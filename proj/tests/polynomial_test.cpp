#include <gtest/gtest.h>

#include "heis/error.hpp"
#include "heis/polynomial.hpp"

using namespace heis;

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
  EXPECT_EQ(ipow(3, 40), BigInt("12157665459056928801"));
}

TEST(Poly, TrimAndDegree) {
  EXPECT_EQ(IntPolynomial({1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(IntPolynomial({0, 0}).is_zero());
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
  EXPECT_EQ((IntPolynomial{1, 1} - IntPolynomial{1, 1}).degree(), -1);
}

TEST(Poly, Arithmetic) {
  const IntPolynomial a{1, 1}, b{-1, 0, 2};
  EXPECT_EQ(a * b, (IntPolynomial{-1, -1, 2, 2}));
  EXPECT_EQ(a + b, (IntPolynomial{0, 1, 2}));
  EXPECT_EQ(a.pow(3), (IntPolynomial{1, 3, 3, 1}));
  EXPECT_EQ(b(BigInt(3)), 17);
  EXPECT_EQ(IntPolynomial::x().pow(70)(BigInt(2)), ipow(2, 70));
}

TEST(Poly, DivisionByXPlusOne) {
  const IntPolynomial p = IntPolynomial{2, -1, 3} * IntPolynomial::x_plus_one();
  EXPECT_EQ(p.divide_by_x_plus_one(), (IntPolynomial{2, -1, 3}));
  EXPECT_THROW((IntPolynomial{1, 0, 1}).divide_by_x_plus_one(), NonIntegralDivision);
  EXPECT_TRUE(IntPolynomial{}.divide_by_x_plus_one().is_zero());
}

TEST(Poly, ChangeOfVariable) {
  // x^2 + 3x + 1 = q^2 + q - 1
  const IntPolynomial he3{1, 3, 1};
  EXPECT_EQ(he3.in_q(), (IntPolynomial{-1, 1, 1}));
  EXPECT_EQ(IntPolynomial::from_q(he3.in_q()), he3);
  for (int q = 2; q < 8; ++q) EXPECT_EQ(he3.in_q()(BigInt(q)), he3(BigInt(q - 1)));
}

TEST(Poly, Predicates) {
  EXPECT_TRUE((IntPolynomial{1, 3, 1}).is_palindromic());
  EXPECT_FALSE((IntPolynomial{1, 3, 2}).is_palindromic());
  EXPECT_TRUE((IntPolynomial{0, 1, 1}).has_nonnegative_coefficients());
  EXPECT_FALSE((IntPolynomial{0, -1, 1}).has_nonnegative_coefficients());
}

TEST(Poly, ToString) {
  EXPECT_EQ((IntPolynomial{1, 3, 1}).to_string(), "1 + 3x + x^2");
  EXPECT_EQ((IntPolynomial{0, -1}).to_string("q"), "-q");
  EXPECT_EQ(IntPolynomial{}.to_string(), "0");
}
