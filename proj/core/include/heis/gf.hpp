#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace heis {

// Field elements are codes 0..q-1. For q = p^k the code is the base-p
// packing of the coefficient vector of a polynomial in the generator, so
// 0 and 1 are the additive and multiplicative identities.
using Code = std::uint8_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  // Shared, cached instance for 2 <= q <= 256 prime power.
  static FieldPtr make(int q);

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return k_; }
  // monic modulus, constant term first; {0, 1} for prime fields
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Code add(Code a, Code b) const noexcept { return add_[idx(a, b)]; }
  Code sub(Code a, Code b) const noexcept { return add_[idx(a, neg_[b])]; }
  Code neg(Code a) const noexcept { return neg_[a]; }
  Code mul(Code a, Code b) const noexcept { return mul_[idx(a, b)]; }
  Code inv(Code a) const;  // throws ZeroInverse
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, unsigned long long e) const noexcept;
  // image of the integer m under Z -> F_q
  Code from_int(long long m) const noexcept;

  std::vector<Code> elements() const;
  std::vector<Code> nonzero() const;

  bool operator==(const Field& o) const noexcept { return q_ == o.q_; }

  explicit Field(int q);  // prefer make()

 private:
  std::size_t idx(Code a, Code b) const noexcept {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b;
  }

  int q_ = 0, p_ = 0, k_ = 0;
  std::vector<int> modulus_;
  std::vector<Code> add_, mul_, neg_, inv_;
};

// Value type carrying its field; arithmetic across fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr f, Code c);
  static FieldElement zero(FieldPtr f) { return {std::move(f), 0}; }
  static FieldElement one(FieldPtr f) { return {std::move(f), 1}; }

  Code code() const noexcept { return c_; }
  const FieldPtr& field() const noexcept { return f_; }
  bool is_zero() const noexcept { return c_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const { return {f_, f_->neg(c_)}; }
  FieldElement inverse() const { return {f_, f_->inv(c_)}; }
  FieldElement pow(unsigned long long e) const { return {f_, f_->pow(c_, e)}; }
  bool operator==(const FieldElement& o) const;

 private:
  void check(const FieldElement& o) const;
  FieldPtr f_;
  Code c_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);

// (p, k) with q = p^k, or throws NotPrimePower
std::pair<int, int> prime_power(int q);

}  // namespace heis
