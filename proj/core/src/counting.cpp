#include "heis/counting.hpp"

#include <array>

#include "heis/error.hpp"

namespace heis {

namespace {

const std::vector<std::pair<int, int>>& steps_of(DelannoyKind k) {
  static const std::vector<std::pair<int, int>> d{{1, 0}, {0, 1}, {1, 1}};
  static const std::vector<std::pair<int, int>> dp{{1, 0}, {0, 1}, {1, 1}, {0, 2}};
  static const std::vector<std::pair<int, int>> dpp{{0, 1}, {2, 1}, {1, 2}};
  switch (k) {
    case DelannoyKind::D: return d;
    case DelannoyKind::Dp: return dp;
    case DelannoyKind::Dpp: return dpp;
  }
  return d;
}

IntPolynomial X() { return IntPolynomial::x(); }
IntPolynomial X1() { return IntPolynomial::x_plus_one(); }
IntPolynomial C(const BigInt& c) { return IntPolynomial::constant(c); }

// sum_{k=0}^{n} coef(n-k, k) x^k, the shape shared by Del, preHe, preIn
IntPolynomial antidiagonal(DelannoyKind kind, int n) {
  std::vector<BigInt> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = delannoy(kind, n - k, k);
  return IntPolynomial(std::move(c));
}

}  // namespace

BigInt delannoy(DelannoyKind kind, long long a, long long b) {
  if (a < 0 || b < 0) return 0;
  std::vector<std::vector<BigInt>> t(a + 1, std::vector<BigInt>(b + 1, 0));
  t[0][0] = 1;
  for (long long x = 0; x <= a; ++x)
    for (long long y = 0; y <= b; ++y) {
      if (x == 0 && y == 0) continue;
      BigInt s = 0;
      for (auto [dx, dy] : steps_of(kind))
        if (x >= dx && y >= dy) s += t[x - dx][y - dy];
      t[x][y] = s;
    }
  return t[a][b];
}

BigInt delannoy_binomial_sum(DelannoyKind kind, long long a, long long b) {
  if (a < 0 || b < 0) return 0;
  BigInt s = 0;
  for (long long k = 0; k <= a + b; ++k) {
    switch (kind) {
      case DelannoyKind::D: s += binomial(a + b - k, k) * binomial(a + b - 2 * k, b - k); break;
      case DelannoyKind::Dp: s += binomial(k, a + b - k) * binomial(k, a); break;
      case DelannoyKind::Dpp: s += binomial(a + b - 2 * k, k) * binomial(k, a - k); break;
    }
  }
  return s;
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 2, 0));
  s[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = 1; j <= m; ++j) s[m][j] = j * s[m - 1][j] + s[m - 1][j - 1];
  return k <= n ? s[n][k] : BigInt(0);
}

BigInt associated_stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, 0));
  s[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = 1; j <= m; ++j) {
      // m joins a block of size >= 2, or pairs with one of the other m-1 elements
      s[m][j] = j * s[m - 1][j];
      if (m >= 2) s[m][j] += (m - 1) * s[m - 2][j - 1];
    }
  return s[n][k];
}

BigInt narayana(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  // state (height, peaks, last step was up); 2n steps
  std::vector<std::vector<std::array<BigInt, 2>>> cur(n + 2, std::vector<std::array<BigInt, 2>>(n + 2));
  cur[0][0][0] = 1;
  for (int step = 0; step < 2 * n; ++step) {
    std::vector<std::vector<std::array<BigInt, 2>>> nxt(n + 2, std::vector<std::array<BigInt, 2>>(n + 2));
    for (int h = 0; h <= n; ++h)
      for (int p = 0; p <= n; ++p)
        for (int up = 0; up < 2; ++up) {
          const BigInt& v = cur[h][p][up];
          if (v == 0) continue;
          if (h < n) nxt[h + 1][p][1] += v;
          if (h > 0) nxt[h - 1][p + up][0] += v;
        }
    cur = std::move(nxt);
  }
  return k <= n ? cur[0][k][0] : BigInt(0);
}

BigInt narayana_formula(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  return binomial(n, k) * binomial(n, k - 1) / n;
}

BigInt catalan(int n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

BigInt fibonacci(int n) {
  if (n < 0) throw DomainError("fibonacci: n must be >= 0");
  BigInt a = 0, b = 1;
  for (int k = 0; k < n; ++k) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return a;
}

BigInt SequenceTable::recompute(long long a, long long b) const {
  switch (kind_) {
    case Kind::delannoy: return delannoy(DelannoyKind::D, a, b);
    case Kind::delannoy_p: return delannoy(DelannoyKind::Dp, a, b);
    case Kind::delannoy_pp: return delannoy(DelannoyKind::Dpp, a, b);
    case Kind::stirling2: return stirling2(static_cast<int>(a), static_cast<int>(b));
    case Kind::associated_stirling2: return associated_stirling2(static_cast<int>(a), static_cast<int>(b));
    case Kind::narayana: return narayana(static_cast<int>(a), static_cast<int>(b));
  }
  return 0;
}

BigInt SequenceTable::value(long long a, long long b) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({a, b});
    if (it != memo_.end()) return it->second;
  }
  BigInt v = recompute(a, b);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(std::make_pair(a, b), v);
  return v;
}

std::size_t SequenceTable::memo_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

Family parse_family(std::string_view name) {
  for (Family f : all_families())
    if (to_string(f) == name) return f;
  throw UnknownFamily("unknown polynomial family '" + std::string(name) + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::del: return "del";
    case Family::pre_he: return "pre_he";
    case Family::pre_in: return "pre_in";
    case Family::he: return "he";
    case Family::inv: return "inv";
    case Family::bell: return "bell";
    case Family::cat: return "cat";
    case Family::fe: return "fe";
    case Family::alt_bell: return "alt_bell";
    case Family::alt_cat: return "alt_cat";
    case Family::alt_del: return "alt_del";
    case Family::alt_he: return "alt_he";
  }
  return "?";
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> v{Family::del, Family::pre_he, Family::pre_in, Family::he,
                                     Family::inv, Family::bell, Family::cat, Family::fe,
                                     Family::alt_bell, Family::alt_cat, Family::alt_del, Family::alt_he};
  return v;
}

IntPolynomial poly(Family f, int n) {
  auto need = [&](int lo) {
    if (n < lo)
      throw DomainError(to_string(f) + " is defined for n >= " + std::to_string(lo) + ", got " + std::to_string(n));
  };
  switch (f) {
    case Family::del: return n <= 0 ? IntPolynomial{} : antidiagonal(DelannoyKind::D, n - 1);
    case Family::pre_he: return n <= 0 ? IntPolynomial{} : antidiagonal(DelannoyKind::Dp, n - 1);
    case Family::pre_in: return n <= 0 ? IntPolynomial{} : antidiagonal(DelannoyKind::Dpp, n - 1);
    case Family::he: return poly(Family::pre_he, n) - X().pow(2) * poly(Family::pre_he, n - 2);
    case Family::inv: return X() * poly(Family::pre_in, n - 1) + X() * poly(Family::pre_in, n - 2);
    case Family::bell: {
      need(0);
      std::vector<BigInt> c(n + 1, 0);
      for (int k = 0; k <= n; ++k) c[n - k] = stirling2(n, k);
      return IntPolynomial(std::move(c));
    }
    case Family::cat: {
      need(0);
      std::vector<BigInt> c(n + 1, 0);
      for (int k = 0; k <= n; ++k) c[n - k] = narayana(n, k);
      return IntPolynomial(std::move(c));
    }
    case Family::fe: {
      need(0);
      std::vector<BigInt> c(n + 1, 0);
      for (int k = 0; k <= n; ++k) c[n - k] = associated_stirling2(n, k);
      return IntPolynomial(std::move(c));
    }
    case Family::alt_bell: {
      need(1);
      const auto fe = poly(Family::fe, n - 1);
      return (poly(Family::bell, n) - fe).divide_by_x_plus_one() + fe;
    }
    case Family::alt_cat:
    case Family::alt_del: {
      need(1);
      const auto p = poly(f == Family::alt_cat ? Family::cat : Family::del, n);
      const int m = n - 1;  // AltX_{m+1}
      const IntPolynomial corr = (-X()).pow(m / 2) * C(p(BigInt(-1)));
      return (p - corr).divide_by_x_plus_one();
    }
    case Family::alt_he: {
      need(2);
      const auto in = poly(Family::inv, n - 1);
      return (poly(Family::he, n) - in).divide_by_x_plus_one() + X1() * in;
    }
  }
  throw UnknownFamily("unknown family");
}

bool has_closed_form(Family f) {
  switch (f) {
    case Family::del:
    case Family::pre_he:
    case Family::pre_in:
    case Family::he:
    case Family::inv:
    case Family::alt_bell:
    case Family::alt_cat:
    case Family::alt_del: return true;
    default: return false;
  }
}

IntPolynomial closed_form(Family f, int n) {
  if (!has_closed_form(f)) throw UnknownFamily(to_string(f) + " has no closed form");
  const int m = n - 1;  // sums are stated for index m + 1
  IntPolynomial s;
  switch (f) {
    case Family::del:
      if (n <= 0) return {};
      for (int k = 0; 2 * k <= m; ++k) s += C(binomial(m - k, k)) * X().pow(k) * X1().pow(m - 2 * k);
      return s;
    case Family::pre_he:
      if (n <= 0) return {};
      for (int k = 0; 2 * k <= m; ++k) s += C(binomial(m - k, k)) * X().pow(k) * X1().pow(m - k);
      return s;
    case Family::pre_in:
      if (n <= 0) return {};
      for (int k = 0; 3 * k <= m; ++k) s += C(binomial(m - 2 * k, k)) * X().pow(m - 2 * k) * X1().pow(k);
      return s;
    case Family::he:
      if (n <= 0) return {};
      if (n == 1) return C(1);
      for (int k = 0; 2 * k <= m; ++k)
        s += (C(binomial(m - k, k)) + C(binomial(m - k - 1, k)) * X()) * X().pow(k) * X1().pow(m - k - 1);
      return s;
    case Family::inv:
      if (n <= 1) return {};
      for (int k = 0; 3 * k <= m - 1; ++k)
        s += (C(binomial(m - 2 * k - 2, k)) + C(binomial(m - 2 * k - 1, k)) * X()) * X().pow(m - 2 * k - 1) *
             X1().pow(k);
      return s;
    case Family::alt_bell:
      if (n < 1) throw DomainError("alt_bell is defined for n >= 1");
      for (int k = 0; k <= m; ++k)
        s += C(binomial(m, k)) * poly(Family::fe, m - k) * X1().pow(k == 0 ? 0 : k - 1);
      return s;
    case Family::alt_cat:
      if (n < 1) throw DomainError("alt_cat is defined for n >= 1");
      for (int k = 0; 2 * k <= m - 1; ++k)
        s += C(catalan(k) * binomial(m, 2 * k)) * X().pow(k) * X1().pow(m - 2 * k - 1);
      return s;
    case Family::alt_del:
      if (n < 1) throw DomainError("alt_del is defined for n >= 1");
      for (int k = 0; 2 * k <= m - 1; ++k) s += C(binomial(m - k, k)) * X().pow(k) * X1().pow(m - 2 * k - 1);
      return s;
    default: break;
  }
  throw UnknownFamily(to_string(f) + " has no closed form");
}

std::vector<BigInt> series_coeffs(Family f, const BigInt& x, int N) {
  if (N < 0) throw DomainError("series length must be >= 0");
  // z / (1 - a1 z - a2 z^2 - a3 z^3)
  std::array<BigInt, 4> a{0, 0, 0, 0};
  switch (f) {
    case Family::del: a = {0, x + 1, x, 0}; break;
    case Family::pre_he: a = {0, x + 1, x * (x + 1), 0}; break;
    case Family::pre_in: a = {0, x, 0, x * (x + 1)}; break;
    default: throw UnknownFamily(to_string(f) + " has no generating function here");
  }
  std::vector<BigInt> c(N + 1, 0);
  for (int n = 1; n <= N; ++n) {
    BigInt v = n == 1 ? 1 : 0;
    for (int k = 1; k <= 3; ++k)
      if (n - k >= 0) v += a[k] * c[n - k];
    c[n] = v;
  }
  return c;
}

IntPolynomial degree_count(int n, int e) {
  if (n < 2 || e < 0) throw DomainError("degree_count needs n >= 2, e >= 0");
  if (n - e - 2 < 0) return {};
  return X1().pow(n - e - 2) *
         (C(binomial(n - e - 1, e)) * X().pow(e) + C(binomial(n - e - 2, e)) * X().pow(e + 1));
}

BigInt degree_count(int n, int e, const BigInt& q) { return degree_count(n, e)(q - 1); }

BigInt c_invariant_heis_count(int n, int q, CInvMethod method) {
  if (n < 1) throw DomainError("c_invariant_heis_count needs n >= 1");
  const BigInt x = q - 1;
  if (method == CInvMethod::recurrence) {
    std::vector<BigInt> a(std::max(n, 3) + 1, 0);
    a[1] = 0;
    a[2] = x;
    a[3] = x * (x + 1);
    for (int m = 4; m <= n; ++m) a[m] = x * a[m - 1] + x * (x + 1) * a[m - 3];
    return a[n];
  }
  // f(k) = x^(k-1) - s(k) x^((k-1)/2), s(k) = sin(k pi / 2)
  auto f = [&x](int k) -> BigInt {
    BigInt v = ipow(x, k - 1);
    if (k % 2 == 0) return v;
    const BigInt h = ipow(x, (k - 1) / 2);
    return k % 4 == 1 ? BigInt(v - h) : BigInt(v + h);
  };
  // sum over compositions of n of prod f(part), accumulated over the last part
  std::vector<BigInt> fk(n + 1), S(n + 1, 0);
  for (int k = 1; k <= n; ++k) fk[k] = f(k);
  S[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k) S[m] += fk[k] * S[m - k];
  return S[n];
}

BigInt tech_lem_count(int d, int q) {
  if (d < 1 || q < 2) throw DomainError("tech_lem_count needs d >= 1, q >= 2");
  const BigInt x = q - 1;
  BigInt num = ipow(x, 2 * d) - (d % 2 == 0 ? 1 : -1) * ipow(x, d);
  if (num % q != 0) throw NonIntegralDivision("tech_lem_count numerator not divisible by q");
  return num / q;
}

}  // namespace heis
