#include "heis/polynomial.hpp"

#include <sstream>

#include "heis/error.hpp"

namespace heis {

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt ipow(const BigInt& b, unsigned e) {
  BigInt r = 1, base = b;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (auto v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, unsigned k) {
  std::vector<BigInt> v(k + 1, 0);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t k = 0; k < c_.size(); ++k) v[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) v[k] += o.c_[k];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t a = 0; a < c_.size(); ++a)
    for (std::size_t b = 0; b < o.c_.size(); ++b) v[a + b] += c_[a] * o.c_[b];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial r = constant(1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

IntPolynomial IntPolynomial::divide_by_x_plus_one() const {
  if (is_zero()) return {};
  // synthetic division by the root -1, top down
  const std::size_t d = c_.size() - 1;
  std::vector<BigInt> quot(d, 0);
  BigInt carry = 0;
  for (std::size_t k = d; k >= 1; --k) {
    carry = c_[k] - carry;  // coefficient of x^(k-1) in the quotient
    quot[k - 1] = carry;
  }
  if (c_[0] - carry != 0)
    throw NonIntegralDivision("(" + to_string() + ") is not divisible by (x + 1)");
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::taylor_shift(const BigInt& c) const {
  IntPolynomial r;
  const IntPolynomial lin{0, 1};
  const IntPolynomial shift = lin + constant(c);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * shift + constant(*it);
  return r;
}

bool IntPolynomial::is_palindromic() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != c_[c_.size() - 1 - k]) return false;
  return true;
}

bool IntPolynomial::has_nonnegative_coefficients() const {
  for (const auto& c : c_)
    if (c < 0) return false;
  return true;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    BigInt c = c_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    if (k == 0 || c != 1) os << c;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace heis
