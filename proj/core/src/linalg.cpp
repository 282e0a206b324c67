#include "heis/linalg.hpp"

#include <sstream>

#include "heis/error.hpp"

namespace heis {

StrictUpperMatrix::StrictUpperMatrix(FieldPtr f, int n) : f_(std::move(f)), n_(n) {
  if (!f_) throw Error("null field");
  if (n < 1) throw DomainError("matrix dimension must be >= 1");
  e_.assign(size_for(n), 0);
}

StrictUpperMatrix::StrictUpperMatrix(FieldPtr f, int n, std::vector<Code> entries)
    : StrictUpperMatrix(std::move(f), n) {
  if (entries.size() != e_.size())
    throw DimensionMismatch("expected " + std::to_string(e_.size()) + " entries");
  for (Code c : entries)
    if (c >= f_->order()) throw DomainError("entry code out of range");
  e_ = std::move(entries);
}

StrictUpperMatrix StrictUpperMatrix::elementary(FieldPtr f, int n, int i, int j, Code t) {
  StrictUpperMatrix m(std::move(f), n);
  m.set(i, j, t);
  return m;
}

std::pair<int, int> StrictUpperMatrix::position(int n, std::size_t k) {
  int i = 1;
  while (k >= static_cast<std::size_t>(n - i)) {
    k -= static_cast<std::size_t>(n - i);
    ++i;
  }
  return {i, i + 1 + static_cast<int>(k)};
}

Code StrictUpperMatrix::at(int i, int j) const {
  if (i < 1 || j > n_ || i > n_ || j < 1) throw DomainError("index out of range");
  if (i >= j) return 0;
  return e_[index(n_, i, j)];
}

void StrictUpperMatrix::set(int i, int j, Code v) {
  if (i < 1 || j > n_ || i >= j) throw DomainError("position (" + std::to_string(i) + "," + std::to_string(j) + ") is not above the diagonal");
  if (v >= f_->order()) throw DomainError("entry code out of range");
  e_[index(n_, i, j)] = v;
}

bool StrictUpperMatrix::is_zero() const noexcept {
  for (Code c : e_)
    if (c) return false;
  return true;
}

void StrictUpperMatrix::check(const StrictUpperMatrix& o) const {
  if (!(*f_ == *o.f_)) throw FieldMismatch("matrices over different fields");
  if (n_ != o.n_) throw DimensionMismatch("matrices of different size");
}

StrictUpperMatrix StrictUpperMatrix::operator+(const StrictUpperMatrix& o) const {
  check(o);
  StrictUpperMatrix r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = f_->add(e_[k], o.e_[k]);
  return r;
}

StrictUpperMatrix StrictUpperMatrix::operator-(const StrictUpperMatrix& o) const {
  check(o);
  StrictUpperMatrix r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = f_->sub(e_[k], o.e_[k]);
  return r;
}

StrictUpperMatrix StrictUpperMatrix::operator*(const StrictUpperMatrix& o) const {
  check(o);
  StrictUpperMatrix r(f_, n_);
  const Field& F = *f_;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 2; j <= n_; ++j) {
      Code s = 0;
      for (int k = i + 1; k < j; ++k) s = F.add(s, F.mul(at(i, k), o.at(k, j)));
      r.e_[index(n_, i, j)] = s;
    }
  return r;
}

StrictUpperMatrix StrictUpperMatrix::scaled(Code t) const {
  StrictUpperMatrix r(*this);
  for (auto& c : r.e_) c = f_->mul(c, t);
  return r;
}

bool StrictUpperMatrix::operator==(const StrictUpperMatrix& o) const {
  return *f_ == *o.f_ && n_ == o.n_ && e_ == o.e_;
}

UnitriangularElement group_mul(const UnitriangularElement& a, const UnitriangularElement& b) {
  const auto& x = a.above();
  const auto& y = b.above();
  return UnitriangularElement(x + y + x * y);
}

UnitriangularElement group_inv(const UnitriangularElement& g) {
  // (1 + X)^-1 = 1 - X + X^2 - ..., X^n = 0
  const auto& x = g.above();
  StrictUpperMatrix sum(x.field_ptr(), x.dim());
  StrictUpperMatrix term = x;
  bool negative = true;
  while (!term.is_zero()) {
    sum = negative ? sum - term : sum + term;
    term = term * x;
    negative = !negative;
  }
  return UnitriangularElement(sum);
}

Code sigma(const UnitriangularElement& g) {
  const auto& x = g.above();
  Code s = 0;
  for (int i = 1; i < x.dim(); ++i) s = x.field().add(s, x.at(i, i + 1));
  return s;
}

Functional Functional::dual(FieldPtr f, int n, int i, int j, Code t) {
  return Functional(StrictUpperMatrix::elementary(std::move(f), n, i, j, t));
}

Functional Functional::gamma(FieldPtr f, int n) {
  StrictUpperMatrix m(std::move(f), n);
  for (int i = 1; i < n; ++i) m.set(i, i + 1, 1);
  return Functional(std::move(m));
}

Code Functional::operator()(const StrictUpperMatrix& y) const {
  if (!(m_.field() == y.field())) throw FieldMismatch("functional and matrix over different fields");
  if (m_.dim() != y.dim()) throw DimensionMismatch("functional and matrix of different size");
  const Field& F = m_.field();
  Code s = 0;
  auto a = m_.entries();
  auto b = y.entries();
  for (std::size_t k = 0; k < a.size(); ++k) s = F.add(s, F.mul(a[k], b[k]));
  return s;
}

namespace {

// (1 + A) B and B (1 + A) for strictly upper A, B
StrictUpperMatrix unit_times(const UnitriangularElement& g, const StrictUpperMatrix& b) {
  return b + g.above() * b;
}

StrictUpperMatrix times_unit(const StrictUpperMatrix& b, const UnitriangularElement& g) {
  return b + b * g.above();
}

}  // namespace

Functional act(Action mode, const UnitriangularElement& g, const Functional& lambda) {
  if (g.dim() != lambda.dim()) throw DimensionMismatch("group element and functional of different size");
  if (!(g.above().field() == lambda.matrix().field())) throw FieldMismatch("group element and functional over different fields");
  const int n = lambda.dim();
  const FieldPtr& f = lambda.matrix().field_ptr();
  const UnitriangularElement ginv = group_inv(g);
  StrictUpperMatrix out(f, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto e = StrictUpperMatrix::elementary(f, n, i, j);
      StrictUpperMatrix y(f, n);
      switch (mode) {
        case Action::left: y = unit_times(ginv, e); break;
        case Action::right: y = times_unit(e, ginv); break;
        case Action::coadjoint: y = times_unit(unit_times(ginv, e), g); break;
      }
      out.set(i, j, lambda(y));
    }
  return Functional(std::move(out));
}

std::vector<std::pair<int, int>> ideal_positions(int n, int k) {
  if (k < 1) throw DomainError("k must be >= 1");
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + k; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

SquareMatrix upper_form(const StrictUpperMatrix& x) {
  const int m = x.dim() - 1;
  SquareMatrix u(m);
  for (int a = 1; a <= m; ++a)
    for (int b = a; b <= m; ++b) u.at(a, b) = x.at(a, b + 1);
  return u;
}

StrictUpperMatrix from_upper_form(FieldPtr f, const SquareMatrix& u) {
  StrictUpperMatrix x(std::move(f), u.size + 1);
  for (int a = 1; a <= u.size; ++a)
    for (int b = 1; b <= u.size; ++b) {
      if (b < a) {
        if (u.at(a, b)) throw DomainError("upper form has an entry below the diagonal");
        continue;
      }
      x.set(a, b + 1, u.at(a, b));
    }
  return x;
}

std::vector<SquareMatrix> block_decomposition(const Functional& lambda) {
  const SquareMatrix u = upper_form(lambda.matrix());
  const int m = u.size;
  if (m == 0) return {};
  // cut after row/column c when nothing links {1..c} with {c+1..m}, in
  // either off-diagonal rectangle
  std::vector<int> cuts{0};
  for (int c = 1; c < m; ++c) {
    bool clear = true;
    for (int r = 1; r <= c && clear; ++r)
      for (int s = c + 1; s <= m; ++s)
        if (u.at(r, s) || u.at(s, r)) {
          clear = false;
          break;
        }
    if (clear) cuts.push_back(c);
  }
  cuts.push_back(m);
  std::vector<SquareMatrix> blocks;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const int lo = cuts[k], sz = cuts[k + 1] - cuts[k];
    SquareMatrix b(sz);
    for (int r = 1; r <= sz; ++r)
      for (int s = 1; s <= sz; ++s) b.at(r, s) = u.at(lo + r, lo + s);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

SquareMatrix block_diagonal(const std::vector<SquareMatrix>& blocks) {
  int m = 0;
  for (const auto& b : blocks) m += b.size;
  SquareMatrix u(m);
  int lo = 0;
  for (const auto& b : blocks) {
    for (int r = 1; r <= b.size; ++r)
      for (int s = 1; s <= b.size; ++s) u.at(lo + r, lo + s) = b.at(r, s);
    lo += b.size;
  }
  return u;
}

std::string serialize(const Functional& lambda) {
  std::ostringstream os;
  os << lambda.dim() << ' ' << lambda.matrix().field().order();
  for (Code c : lambda.matrix().entries()) os << ' ' << static_cast<int>(c);
  return os.str();
}

Functional parse_functional(std::string_view text) {
  std::istringstream is{std::string(text)};
  int n = 0, q = 0;
  if (!(is >> n >> q)) throw ParseError("functional: expected 'n q entries...'");
  if (n < 1) throw ParseError("functional: n must be >= 1");
  auto f = Field::make(q);
  std::vector<Code> e;
  int c = 0;
  while (is >> c) {
    if (c < 0 || c >= q) throw ParseError("functional: entry out of range");
    e.push_back(static_cast<Code>(c));
  }
  if (!is.eof()) throw ParseError("functional: non-numeric entry");
  if (e.size() != StrictUpperMatrix::size_for(n))
    throw ParseError("functional: expected " + std::to_string(StrictUpperMatrix::size_for(n)) + " entries");
  return Functional(StrictUpperMatrix(f, n, std::move(e)));
}

std::string pretty(const Functional& lambda) {
  std::ostringstream os;
  bool first = true;
  const int n = lambda.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Code c = lambda.at(i, j);
      if (!c) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1) os << static_cast<int>(c) << '*';
      os << "e(" << i << ',' << j << ')';
    }
  if (first) os << '0';
  return os.str();
}

}  // namespace heis
