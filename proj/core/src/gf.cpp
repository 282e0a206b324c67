#include "heis/gf.hpp"

#include <map>
#include <mutex>
#include <string>

#include "heis/error.hpp"

namespace heis {

namespace {

using Poly = std::vector<int>;  // coefficients mod p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo monic m
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = a.back();
    for (int i = 0; i <= dm; ++i)
      a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly decode(int code, int p, int k) {
  Poly a(k);
  for (int i = 0; i < k; ++i) {
    a[i] = code % p;
    code /= p;
  }
  return a;
}

int encode(const Poly& a, int p) {
  int code = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) code = code * p + a[i];
  return code;
}

bool irreducible(const Poly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  // try every monic divisor of degree 1..k/2
  for (int d = 1; 2 * d <= k; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      Poly g = decode(c, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree k, ordered by the base-p code of the
// lower coefficients. Gives x^2 + x + 1 for F_4.
Poly choose_modulus(int p, int k) {
  int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (int c = 0; c < count; ++c) {
    Poly f = decode(c, p, k);
    f.push_back(1);
    if (irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");
}

}  // namespace

std::pair<int, int> prime_power(int q) {
  if (q < 2) throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power");
  int p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return {q, 1};
  int k = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power");
  return {p, k};
}

Field::Field(int q) : q_(q) {
  std::tie(p_, k_) = prime_power(q);
  if (q > 256) throw TooLarge("q = " + std::to_string(q) + " exceeds 256");
  modulus_ = k_ == 1 ? Poly{0, 1} : choose_modulus(p_, k_);

  const auto n = static_cast<std::size_t>(q);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  std::vector<Poly> el(n);
  for (int a = 0; a < q; ++a) el[a] = decode(a, p_, k_);

  for (int a = 0; a < q; ++a) {
    Poly na(k_);
    for (int i = 0; i < k_; ++i) na[i] = (p_ - el[a][i]) % p_;
    neg_[a] = static_cast<Code>(encode(na, p_));
    for (int b = 0; b < q; ++b) {
      Poly s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (el[a][i] + el[b][i]) % p_;
      add_[idx(a, b)] = static_cast<Code>(encode(s, p_));

      Poly prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + el[a][i] * el[b][j]) % p_;
      Poly r = k_ == 1 ? prod : poly_mod(prod, modulus_, p_);
      r.resize(k_, 0);
      mul_[idx(a, b)] = static_cast<Code>(encode(r, p_));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[idx(a, b)] == 1) {
        inv_[a] = static_cast<Code>(b);
        break;
      }
}

FieldPtr Field::make(int q) {
  static std::mutex mu;
  static std::map<int, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
  }
  auto f = std::make_shared<const Field>(q);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(q, std::move(f)).first->second;
}

Code Field::inv(Code a) const {
  if (a == 0) throw ZeroInverse("inverse of zero in F_" + std::to_string(q_));
  return inv_[a];
}

Code Field::pow(Code a, unsigned long long e) const noexcept {
  Code r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Code Field::from_int(long long m) const noexcept {
  long long r = m % p_;
  if (r < 0) r += p_;
  return static_cast<Code>(r);  // prime subfield codes are 0..p-1
}

std::vector<Code> Field::elements() const {
  std::vector<Code> out(q_);
  for (int a = 0; a < q_; ++a) out[a] = static_cast<Code>(a);
  return out;
}

std::vector<Code> Field::nonzero() const {
  std::vector<Code> out;
  for (int a = 1; a < q_; ++a) out.push_back(static_cast<Code>(a));
  return out;
}

FieldElement::FieldElement(FieldPtr f, Code c) : f_(std::move(f)), c_(c) {
  if (!f_) throw Error("null field");
  if (c_ >= f_->order()) throw DomainError("code " + std::to_string(c_) + " out of range");
}

void FieldElement::check(const FieldElement& o) const {
  if (!(*f_ == *o.f_))
    throw FieldMismatch("F_" + std::to_string(f_->order()) + " vs F_" + std::to_string(o.f_->order()));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return {f_, f_->add(c_, o.c_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return {f_, f_->sub(c_, o.c_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  return {f_, f_->mul(c_, o.c_)};
}
bool FieldElement::operator==(const FieldElement& o) const {
  return *f_ == *o.f_ && c_ == o.c_;
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement inv(const FieldElement& a) { return a.inverse(); }

}  // namespace heis
