#pragma once

#include <cstdint>
#include <vector>

#include "heis/linalg.hpp"

namespace heis::oracle {

using PointCode = std::uint64_t;

// Entry (r, c) of a strictly upper triangular matrix.
struct SparseEntry {
  int r, c;
  Code v;
};

// g = 1 + Z; both Z and the off-diagonal part of g^-1 are kept.
struct Generator {
  std::vector<SparseEntry> z;
  std::vector<SparseEntry> z_inv;
};

// full: U_n, generated by 1 + t e_{i,i+1}.
// alternating: U^sigma_n = ker(sigma), generated by 1 + t(e_{i,i+1} - e_{i+1,i+2})
// and 1 + t e_{ij} with j >= i + 2.
enum class GroupKind { full, alternating };

std::vector<Generator> generators(const FieldPtr& f, int n, GroupKind group);

// In-place actions on the dense above-diagonal vector of a functional, given
// the off-diagonal part z_inv of g^-1:
//   left:  l -> l(g^-1 X)
//   right: l -> l(X g^-1)
void act_left(const Field& f, int n, const std::vector<SparseEntry>& z_inv, std::vector<Code>& m);
void act_right(const Field& f, int n, const std::vector<SparseEntry>& z_inv, std::vector<Code>& m);

enum class Mode { left, right, two_sided, coadjoint };

// A coordinate subspace of u_n^* with mixed-radix point codes. The alt_* kinds
// model h^* as u_n^* modulo F_q * gamma, choosing the representative with a
// zero (1,2) entry.
class DualSpace {
 public:
  enum class Kind { full, heisenberg, alt_full, alt_heisenberg };
  DualSpace(FieldPtr f, int n, Kind kind);

  const FieldPtr& field_ptr() const noexcept { return f_; }
  const Field& field() const noexcept { return *f_; }
  int dim() const noexcept { return n_; }
  Kind kind() const noexcept { return kind_; }
  GroupKind group() const noexcept;
  std::size_t coords() const noexcept { return coords_; }
  std::size_t free_coords() const noexcept { return free_.size(); }
  PointCode size() const noexcept { return size_; }

  void normalize(std::vector<Code>& m) const;
  PointCode encode(std::vector<Code> m) const;  // normalizes; throws if m leaves the space
  std::vector<Code> decode(PointCode c) const;
  void decode(PointCode c, std::vector<Code>& out) const;

  PointCode encode(const Functional& lambda) const { return encode(std::vector<Code>(lambda.matrix().entries().begin(), lambda.matrix().entries().end())); }
  Functional functional(PointCode c) const;

  // every move of the mode applied to the point m, handed to fn as a code
  template <class Fn>
  void for_each_neighbour(const std::vector<Code>& m, Mode mode, Fn&& fn) const;

 private:
  FieldPtr f_;
  int n_;
  Kind kind_;
  std::size_t coords_;
  std::vector<std::size_t> free_;
  std::vector<int> slot_;  // coordinate -> free index or -1
  std::vector<PointCode> radix_;
  PointCode size_ = 1;
  bool mod_gamma_ = false;
  std::vector<std::size_t> super_;  // coordinates of (i, i+1)
  std::vector<Generator> gens_;
};

template <class Fn>
void DualSpace::for_each_neighbour(const std::vector<Code>& m, Mode mode, Fn&& fn) const {
  std::vector<Code> w;
  for (const auto& g : gens_) {
    if (mode == Mode::left || mode == Mode::two_sided) {
      w = m;
      act_left(*f_, n_, g.z_inv, w);
      fn(encode(std::move(w)));
    }
    if (mode == Mode::right || mode == Mode::two_sided) {
      w = m;
      act_right(*f_, n_, g.z_inv, w);
      fn(encode(std::move(w)));
    }
    if (mode == Mode::coadjoint) {
      w = m;
      act_left(*f_, n_, g.z_inv, w);
      act_right(*f_, n_, g.z, w);
      fn(encode(std::move(w)));
    }
  }
}

}  // namespace heis::oracle
