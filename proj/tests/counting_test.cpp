#include <gtest/gtest.h>

#include "heis/counting.hpp"
#include "heis/error.hpp"

using namespace heis;

namespace {

std::vector<BigInt> values(Family f, int lo, int hi, long long x) {
  std::vector<BigInt> v;
  for (int n = lo; n <= hi; ++n) v.push_back(poly(f, n)(BigInt(x)));
  return v;
}

std::vector<BigInt> B(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

const IntPolynomial X = IntPolynomial::x();
const IntPolynomial X1 = IntPolynomial::x_plus_one();
IntPolynomial C(const BigInt& c) { return IntPolynomial::constant(c); }

}  // namespace

TEST(Delannoy, Values) {
  for (int a = 0; a < 8; ++a) EXPECT_EQ(delannoy(DelannoyKind::D, a, 0), 1);
  EXPECT_EQ(delannoy(DelannoyKind::D, 1, 1), 3);
  std::vector<BigInt> dp;
  for (int n = 0; n <= 6; ++n) dp.push_back(delannoy(DelannoyKind::Dp, 1, n));
  EXPECT_EQ(dp, B({1, 3, 7, 15, 30, 58, 109}));
  std::vector<BigInt> diff;
  for (int n = 0; n <= 6; ++n)
    diff.push_back(delannoy(DelannoyKind::Dp, 1, n) - (n >= 2 ? delannoy(DelannoyKind::Dp, 1, n - 2) : BigInt(0)));
  EXPECT_EQ(diff, B({1, 3, 6, 12, 23, 43, 79}));
  EXPECT_EQ(delannoy(DelannoyKind::D, -1, 2), 0);
}

TEST(Delannoy, BinomialSumsAgree) {
  for (auto k : {DelannoyKind::D, DelannoyKind::Dp, DelannoyKind::Dpp})
    for (int a = 0; a <= 10; ++a)
      for (int b = 0; b <= 10; ++b) EXPECT_EQ(delannoy(k, a, b), delannoy_binomial_sum(k, a, b)) << a << "," << b;
}

TEST(Classical, StirlingNarayanaCatalan) {
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(associated_stirling2(5, 2), 10);
  for (int n = 1; n <= 12; ++n) {
    BigInt sum = 0;
    for (int k = 1; k <= n; ++k) {
      EXPECT_EQ(narayana(n, k), narayana_formula(n, k));
      sum += narayana(n, k);
    }
    EXPECT_EQ(sum, catalan(n));
  }
  std::vector<BigInt> fib;
  for (int n = 0; n <= 6; ++n) fib.push_back(fibonacci(n));
  EXPECT_EQ(fib, B({0, 1, 1, 2, 3, 5, 8}));
}

TEST(SequenceTable, MemoAgreesWithRecompute) {
  SequenceTable t(SequenceTable::Kind::delannoy_p);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) EXPECT_EQ(t.value(a, b), t.recompute(a, b));
  EXPECT_EQ(t.memo_size(), 36u);
  EXPECT_EQ(t.value(1, 3), 15);
}

TEST(Families, NamesRoundTrip) {
  for (auto f : all_families()) EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_THROW(parse_family("zzz"), UnknownFamily);
}

TEST(Poly, Examples) {
  EXPECT_EQ(poly(Family::he, 3), (IntPolynomial{1, 3, 1}));
  EXPECT_EQ(poly(Family::inv, 2), X);
  EXPECT_EQ(poly(Family::inv, 3), X * X1);
  EXPECT_EQ(poly(Family::alt_he, 2), C(1));
  EXPECT_EQ(poly(Family::alt_he, 3), X1 * X1);
  EXPECT_EQ(closed_form(Family::he, 2), X1);
  EXPECT_EQ(closed_form(Family::alt_cat, 3)(BigInt(1)), 2);
  EXPECT_THROW(poly(Family::alt_he, 1), DomainError);
  EXPECT_THROW(closed_form(Family::bell, 3), UnknownFamily);
}

TEST(Poly, KnownSequences) {
  EXPECT_EQ(values(Family::he, 1, 7, 1), B({1, 2, 5, 14, 38, 104, 284}));
  EXPECT_EQ(values(Family::del, 0, 6, 1), B({0, 1, 2, 5, 12, 29, 70}));
  EXPECT_EQ(values(Family::del, 0, 6, 2), B({0, 1, 3, 11, 39, 139, 495}));
  EXPECT_EQ(values(Family::fe, 0, 6, 1), B({1, 0, 1, 1, 4, 11, 41}));
  EXPECT_EQ(values(Family::alt_cat, 2, 8, 1), B({1, 2, 7, 20, 66, 212, 715}));
  EXPECT_EQ(values(Family::alt_del, 1, 7, 1), B({0, 1, 2, 6, 14, 35, 84}));
  std::vector<BigInt> even, odd;
  for (int n = 2; n <= 8; ++n) {
    even.push_back(poly(Family::alt_bell, n)(BigInt(1)) - poly(Family::bell, n - 1)(BigInt(1)));
    odd.push_back(poly(Family::bell, n)(BigInt(1)) - poly(Family::alt_bell, n)(BigInt(1)));
  }
  EXPECT_EQ(even, B({0, 1, 3, 13, 55, 256, 1274}));
  EXPECT_EQ(odd, B({1, 2, 7, 24, 96, 418, 1989}));
}

TEST(Poly, ClosedFormsAgree) {
  for (auto f : all_families()) {
    if (!has_closed_form(f)) continue;
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(closed_form(f, n), poly(f, n)) << to_string(f) << " " << n;
  }
}

TEST(Poly, DefiningIdentities) {
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(poly(Family::he, n), poly(Family::pre_he, n) - X * X * poly(Family::pre_he, n - 2));
    EXPECT_EQ(poly(Family::inv, n), X * poly(Family::pre_in, n - 1) + X * poly(Family::pre_in, n - 2));
  }
  for (int n = 4; n <= 12; ++n)
    EXPECT_EQ(poly(Family::inv, n), X * poly(Family::inv, n - 1) + X * X1 * poly(Family::inv, n - 3));
}

TEST(Poly, BellCatalanAlternateForms) {
  for (int n = 0; n <= 10; ++n) {
    IntPolynomial bell, cat, rec;
    for (int k = 0; k <= n; ++k) {
      bell += C(binomial(n, k)) * poly(Family::fe, k) * X1.pow(n - k);
      rec += X.pow(k) * C(binomial(n, k)) * poly(Family::bell, n - k);
      if (2 * k <= n) cat += C(catalan(k) * binomial(n, 2 * k)) * X.pow(k) * X1.pow(n - 2 * k);
    }
    EXPECT_EQ(poly(Family::bell, n + 1), bell) << n;
    EXPECT_EQ(poly(Family::bell, n + 1), rec) << n;
    EXPECT_EQ(poly(Family::cat, n + 1), cat) << n;
  }
  for (int n = 1; n <= 10; ++n) {
    IntPolynomial s;
    for (int k = 0; k <= n; ++k) {
      const IntPolynomial w = (X.pow(k) + C(k % 2 ? -1 : 1) * X).divide_by_x_plus_one();
      s += w * C(binomial(n, k)) * poly(Family::bell, n - k);
    }
    EXPECT_EQ(poly(Family::alt_bell, n + 1), s) << n;
  }
}

TEST(Poly, PalindromicAndNonnegative) {
  for (int n = 1; n <= 12; ++n) {
    for (auto f : {Family::cat, Family::del, Family::alt_cat, Family::alt_del})
      EXPECT_TRUE(poly(f, n).is_palindromic()) << to_string(f) << " " << n;
    for (auto f : {Family::he, Family::inv, Family::alt_bell, Family::alt_cat, Family::alt_del})
      EXPECT_TRUE(poly(f, n).has_nonnegative_coefficients()) << to_string(f) << " " << n;
    if (n >= 2) EXPECT_TRUE(poly(Family::alt_he, n).has_nonnegative_coefficients()) << n;
  }
}

TEST(Poly, NarayanaAndFe) {
  EXPECT_EQ(values(Family::bell, 1, 6, 1), B({1, 2, 5, 15, 52, 203}));
  EXPECT_EQ(values(Family::cat, 1, 6, 1), B({1, 2, 5, 14, 42, 132}));
}

TEST(Poly, FibonacciLeadingCoefficients) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(poly(Family::he, n + 1).leading(), fibonacci(n)) << n;
    EXPECT_EQ(poly(Family::pre_he, n).leading(), fibonacci(n)) << n;
  }
}

TEST(Poly, CInvariantClosedForms) {
  for (int n = 0; n <= 12; ++n)
    for (int q : {2, 3, 4}) {
      const BigInt x = q - 1;
      const BigInt lhs_cat = ipow(-x, static_cast<unsigned>(n / 2)) * poly(Family::cat, n + 1)(BigInt(-1));
      const BigInt lhs_del = ipow(-x, static_cast<unsigned>(n / 2)) * poly(Family::del, n + 1)(BigInt(-1));
      const BigInt scale = n % 2 ? BigInt(0) : ipow(x, static_cast<unsigned>(n / 2));
      EXPECT_EQ(lhs_cat, scale * catalan(n / 2)) << n << " " << q;
      EXPECT_EQ(lhs_del, scale) << n << " " << q;
    }
}

TEST(Series, MatchesPolynomials) {
  EXPECT_EQ(series_coeffs(Family::del, 1, 6), B({0, 1, 2, 5, 12, 29, 70}));
  EXPECT_EQ(series_coeffs(Family::del, 2, 6), B({0, 1, 3, 11, 39, 139, 495}));
  for (auto f : {Family::del, Family::pre_he, Family::pre_in})
    for (long long x : {1, 2, 3}) EXPECT_EQ(series_coeffs(f, x, 10), values(f, 0, 10, x)) << to_string(f);
}

TEST(DegreeCount, Examples) {
  // q^2 and q - 1
  EXPECT_EQ(degree_count(3, 0).in_q(), (IntPolynomial{0, 0, 1}));
  EXPECT_EQ(degree_count(3, 1).in_q(), (IntPolynomial{-1, 1}));
  EXPECT_EQ(degree_count(4, 1, 2), 6);
  for (int n = 2; n <= 8; ++n) {
    IntPolynomial s;
    for (int e = 0; e <= n; ++e) s += degree_count(n, e);
    EXPECT_EQ(s, poly(Family::he, n)) << n;
  }
}

TEST(CInvariantHeis, MethodsAgree) {
  for (int q : {2, 3, 4, 5}) {
    EXPECT_EQ(c_invariant_heis_count(1, q, CInvMethod::compositions), 0);
    EXPECT_EQ(c_invariant_heis_count(1, q, CInvMethod::recurrence), 0);
    EXPECT_EQ(c_invariant_heis_count(3, q, CInvMethod::compositions), (q - 1) * q);
    for (int n = 1; n <= 10; ++n) {
      const BigInt c = c_invariant_heis_count(n, q, CInvMethod::compositions);
      EXPECT_EQ(c, c_invariant_heis_count(n, q, CInvMethod::recurrence)) << n << " " << q;
      EXPECT_EQ(c, poly(Family::inv, n)(BigInt(q - 1))) << n << " " << q;
    }
  }
}

TEST(CInvariantHeis, LargeN) {
  for (int q : {2, 7})
    EXPECT_EQ(c_invariant_heis_count(60, q, CInvMethod::compositions), c_invariant_heis_count(60, q, CInvMethod::recurrence));
}

TEST(TechLem, Values) {
  EXPECT_EQ(tech_lem_count(1, 5), 4);
  EXPECT_EQ(tech_lem_count(2, 2), 0);
  EXPECT_EQ(tech_lem_count(2, 3), 4);
  EXPECT_THROW(tech_lem_count(0, 3), DomainError);
}
