#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace heis {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(long long n, long long k);  // 0 unless 0 <= k <= n
BigInt ipow(const BigInt& b, unsigned e);

// Integer polynomial, by default in x = q - 1. No trailing zero coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);
  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, unsigned k);
  static IntPolynomial x() { return monomial(1, 1); }
  static IntPolynomial x_plus_one() { return IntPolynomial{1, 1}; }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  BigInt coefficient(int k) const;
  BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

  BigInt operator()(const BigInt& x) const;
  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
  IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }
  IntPolynomial pow(unsigned e) const;
  bool operator==(const IntPolynomial&) const = default;

  // exact quotient by (x + 1); throws NonIntegralDivision on a nonzero remainder
  IntPolynomial divide_by_x_plus_one() const;
  // p(x + c)
  IntPolynomial taylor_shift(const BigInt& c) const;
  // re-expand p(x) in q = x + 1, and back
  IntPolynomial in_q() const { return taylor_shift(-1); }
  static IntPolynomial from_q(const IntPolynomial& pq) { return pq.taylor_shift(1); }

  bool is_palindromic() const;
  bool has_nonnegative_coefficients() const;
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace heis
