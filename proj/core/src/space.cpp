#include "heis/space.hpp"

#include <algorithm>
#include <cmath>

#include "heis/error.hpp"
#include "heis/limits.hpp"

namespace heis::oracle {

namespace {

std::vector<SparseEntry> sparse_of(const StrictUpperMatrix& x) {
  std::vector<SparseEntry> out;
  const int n = x.dim();
  for (int r = 1; r <= n; ++r)
    for (int c = r + 1; c <= n; ++c)
      if (Code v = x.at(r, c)) out.push_back({r, c, v});
  return out;
}

Generator make_generator(const StrictUpperMatrix& z) {
  const auto inv = group_inv(UnitriangularElement(z));
  return {sparse_of(z), sparse_of(inv.above())};
}

}  // namespace

std::vector<Generator> generators(const FieldPtr& f, int n, GroupKind group) {
  std::vector<Generator> out;
  for (Code t : f->nonzero()) {
    if (group == GroupKind::full) {
      for (int i = 1; i < n; ++i) out.push_back(make_generator(StrictUpperMatrix::elementary(f, n, i, i + 1, t)));
    } else {
      for (int i = 1; i + 2 <= n; ++i) {
        StrictUpperMatrix z(f, n);
        z.set(i, i + 1, t);
        z.set(i + 1, i + 2, f->neg(t));
        out.push_back(make_generator(z));
      }
      for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) out.push_back(make_generator(StrictUpperMatrix::elementary(f, n, i, j, t)));
    }
  }
  return out;
}

void act_left(const Field& f, int n, const std::vector<SparseEntry>& z_inv, std::vector<Code>& m) {
  // row c += v * row a for each (a, c, v), bottom row first so sources are unmodified
  std::vector<SparseEntry> es = z_inv;
  std::sort(es.begin(), es.end(), [](const SparseEntry& x, const SparseEntry& y) { return x.c > y.c; });
  for (const auto& e : es)
    for (int b = e.c + 1; b <= n; ++b) {
      auto& dst = m[StrictUpperMatrix::index(n, e.c, b)];
      dst = f.add(dst, f.mul(e.v, m[StrictUpperMatrix::index(n, e.r, b)]));
    }
}

void act_right(const Field& f, int n, const std::vector<SparseEntry>& z_inv, std::vector<Code>& m) {
  // column c += v * column b for each (c, b, v), columns left to right
  std::vector<SparseEntry> es = z_inv;
  std::sort(es.begin(), es.end(), [](const SparseEntry& x, const SparseEntry& y) { return x.r < y.r; });
  for (const auto& e : es)
    for (int a = 1; a < e.r; ++a) {
      auto& dst = m[StrictUpperMatrix::index(n, a, e.r)];
      dst = f.add(dst, f.mul(e.v, m[StrictUpperMatrix::index(n, a, e.c)]));
    }
}

DualSpace::DualSpace(FieldPtr f, int n, Kind kind)
    : f_(std::move(f)), n_(n), kind_(kind), coords_(StrictUpperMatrix::size_for(n)) {
  if (n < 1) throw DomainError("n must be >= 1");
  mod_gamma_ = (kind == Kind::alt_full || kind == Kind::alt_heisenberg) && n >= 2;
  slot_.assign(coords_, -1);
  for (std::size_t k = 0; k < coords_; ++k) {
    const auto [i, j] = StrictUpperMatrix::position(n, k);
    if (j == i + 1) super_.push_back(k);
    const bool heis = kind == Kind::heisenberg || kind == Kind::alt_heisenberg;
    if (heis && j - i > 2) continue;
    if (mod_gamma_ && i == 1 && j == 2) continue;
    slot_[k] = static_cast<int>(free_.size());
    free_.push_back(k);
  }
  const double bits = static_cast<double>(free_.size()) * std::log2(static_cast<double>(f_->order()));
  if (bits > 63.0) throw SpaceTooLarge("point codes need " + std::to_string(bits) + " bits (limit 63)");
  for (std::size_t k = 0; k < free_.size(); ++k) {
    radix_.push_back(size_);
    size_ *= static_cast<PointCode>(f_->order());
  }
  gens_ = generators(f_, n, group());
}

GroupKind DualSpace::group() const noexcept {
  return kind_ == Kind::alt_full || kind_ == Kind::alt_heisenberg ? GroupKind::alternating : GroupKind::full;
}

void DualSpace::normalize(std::vector<Code>& m) const {
  if (!mod_gamma_) return;
  const Code t = m[0];  // entry (1,2)
  if (!t) return;
  for (auto k : super_) m[k] = f_->sub(m[k], t);
}

PointCode DualSpace::encode(std::vector<Code> m) const {
  normalize(m);
  PointCode c = 0;
  for (std::size_t k = 0; k < coords_; ++k) {
    if (slot_[k] < 0) {
      if (m[k]) throw DomainError("functional leaves the coordinate subspace");
      continue;
    }
    c += radix_[slot_[k]] * m[k];
  }
  return c;
}

void DualSpace::decode(PointCode c, std::vector<Code>& out) const {
  out.assign(coords_, 0);
  const auto q = static_cast<PointCode>(f_->order());
  for (std::size_t s = 0; s < free_.size(); ++s) {
    out[free_[s]] = static_cast<Code>(c % q);
    c /= q;
  }
}

std::vector<Code> DualSpace::decode(PointCode c) const {
  std::vector<Code> out;
  decode(c, out);
  return out;
}

Functional DualSpace::functional(PointCode c) const {
  return Functional(StrictUpperMatrix(f_, n_, decode(c)));
}

}  // namespace heis::oracle
