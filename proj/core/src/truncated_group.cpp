#include "heis/truncated_group.hpp"

#include <cmath>

#include "heis/error.hpp"
#include "heis/limits.hpp"

namespace heis::oracle {

TruncatedElement::TruncatedElement(FieldPtr f, int n)
    : f_(std::move(f)), n_(n), d1_(std::max(n - 1, 0), 0), d2_(std::max(n - 2, 0), 0) {}

TruncatedElement::TruncatedElement(FieldPtr f, int n, std::vector<Code> d1, std::vector<Code> d2)
    : f_(std::move(f)), n_(n), d1_(std::move(d1)), d2_(std::move(d2)) {
  if (d1_.size() != static_cast<std::size_t>(std::max(n - 1, 0)) ||
      d2_.size() != static_cast<std::size_t>(std::max(n - 2, 0)))
    throw DimensionMismatch("truncated element has the wrong number of entries");
}

TruncatedElement TruncatedElement::operator*(const TruncatedElement& o) const {
  if (n_ != o.n_) throw DimensionMismatch("truncated elements of different size");
  const Field& F = *f_;
  TruncatedElement r(f_, n_);
  for (std::size_t i = 0; i < d1_.size(); ++i) r.d1_[i] = F.add(d1_[i], o.d1_[i]);
  for (std::size_t i = 0; i < d2_.size(); ++i)
    r.d2_[i] = F.add(F.add(d2_[i], o.d2_[i]), F.mul(d1_[i], o.d1_[i + 1]));
  return r;
}

TruncatedElement TruncatedElement::inverse() const {
  const Field& F = *f_;
  TruncatedElement r(f_, n_);
  for (std::size_t i = 0; i < d1_.size(); ++i) r.d1_[i] = F.neg(d1_[i]);
  for (std::size_t i = 0; i < d2_.size(); ++i) r.d2_[i] = F.sub(F.mul(d1_[i], d1_[i + 1]), d2_[i]);
  return r;
}

std::uint64_t TruncatedElement::code() const {
  const auto q = static_cast<std::uint64_t>(f_->order());
  std::uint64_t c = 0, r = 1;
  for (Code v : d1_) {
    c += r * v;
    r *= q;
  }
  for (Code v : d2_) {
    c += r * v;
    r *= q;
  }
  return c;
}

TruncatedElement TruncatedElement::from_code(FieldPtr f, int n, std::uint64_t c) {
  const auto q = static_cast<std::uint64_t>(f->order());
  std::vector<Code> d1(std::max(n - 1, 0)), d2(std::max(n - 2, 0));
  for (auto& v : d1) {
    v = static_cast<Code>(c % q);
    c /= q;
  }
  for (auto& v : d2) {
    v = static_cast<Code>(c % q);
    c /= q;
  }
  return TruncatedElement(std::move(f), n, std::move(d1), std::move(d2));
}

namespace {

std::uint64_t checked_order(int q, std::size_t coords) {
  const double bits = static_cast<double>(coords) * std::log2(static_cast<double>(q));
  std::uint64_t order = 1;
  for (std::size_t k = 0; k < coords; ++k) order *= static_cast<std::uint64_t>(q);
  if (bits > 40 || order > max_space_points())
    throw SpaceTooLarge("group of order q^" + std::to_string(coords) + " exceeds " + std::to_string(max_space_points()));
  return order;
}

// Sweep codes upward, flood each unseen member through conjugation moves.
template <class Member, class Neighbours>
ClassCensus sweep(std::uint64_t space, Member&& member, Neighbours&& neighbours) {
  ClassCensus out;
  std::vector<bool> seen(space, false);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t seed = 0; seed < space; ++seed) {
    if (seen[seed] || !member(seed)) continue;
    std::uint64_t size = 1;
    seen[seed] = true;
    stack.assign(1, seed);
    while (!stack.empty()) {
      const auto c = stack.back();
      stack.pop_back();
      neighbours(c, [&](std::uint64_t d) {
        if (!seen[d]) {
          seen[d] = true;
          ++size;
          stack.push_back(d);
        }
      });
    }
    out.class_sizes.push_back(size);
    out.order += size;
  }
  return out;
}

}  // namespace

ClassCensus conjugacy_classes(const GroupSpec& g) {
  if (g.n < 1) throw DomainError("n must be >= 1");
  auto f = Field::make(g.q);
  const int n = g.n;
  if (g.kind == GroupSpec::Kind::unitriangular) {
    DualSpace space(f, n, DualSpace::Kind::full);  // reused only for its codec
    const auto order = checked_order(g.q, space.coords());
    // conjugation by 1 + tE, E = e_{i,i+1}: Y -> (1 + tE) Y (1 - tE)
    return sweep(
        order, [](std::uint64_t) { return true; },
        [&](std::uint64_t c, auto&& emit) {
          std::vector<Code> y;
          space.decode(c, y);
          const Field& F = *f;
          for (Code t : F.nonzero())
            for (int i = 1; i < n; ++i) {
              auto w = y;
              for (int b = i + 2; b <= n; ++b) {
                auto& dst = w[StrictUpperMatrix::index(n, i, b)];
                dst = F.add(dst, F.mul(t, w[StrictUpperMatrix::index(n, i + 1, b)]));
              }
              for (int a = 1; a < i; ++a) {
                auto& dst = w[StrictUpperMatrix::index(n, a, i + 1)];
                dst = F.sub(dst, F.mul(t, w[StrictUpperMatrix::index(n, a, i)]));
              }
              emit(space.encode(std::move(w)));
            }
        });
  }

  const std::size_t coords = static_cast<std::size_t>(std::max(n - 1, 0) + std::max(n - 2, 0));
  const auto order = checked_order(g.q, coords);
  std::vector<TruncatedElement> gens;
  const bool alt = g.kind == GroupSpec::Kind::truncated_alternating;
  for (Code t : f->nonzero()) {
    if (!alt) {
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<Code> d1(n - 1, 0), d2(std::max(n - 2, 0), 0);
        d1[i] = t;
        gens.emplace_back(f, n, d1, d2);
      }
    } else {
      for (int i = 0; i + 2 < n; ++i) {
        std::vector<Code> d1(n - 1, 0), d2(n - 2, 0);
        d1[i] = t;
        d1[i + 1] = f->neg(t);
        gens.emplace_back(f, n, d1, d2);
      }
      for (int i = 0; i + 2 < n; ++i) {
        std::vector<Code> d1(n - 1, 0), d2(n - 2, 0);
        d2[i] = t;
        gens.emplace_back(f, n, d1, d2);
      }
    }
  }
  std::vector<TruncatedElement> inv;
  for (const auto& x : gens) inv.push_back(x.inverse());
  return sweep(
      order,
      [&](std::uint64_t c) {
        if (!alt) return true;
        const auto x = TruncatedElement::from_code(f, n, c);
        Code s = 0;
        for (Code v : x.d1()) s = f->add(s, v);
        return s == 0;
      },
      [&](std::uint64_t c, auto&& emit) {
        const auto x = TruncatedElement::from_code(f, n, c);
        for (std::size_t k = 0; k < gens.size(); ++k) emit((gens[k] * x * inv[k]).code());
      });
}

}  // namespace heis::oracle
