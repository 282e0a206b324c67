#pragma once

#include <vector>

#include "heis/gf.hpp"

namespace heis {

using Vec = std::vector<Code>;

// Subspace of F_q^d kept as a reduced row echelon basis, so equal subspaces
// have identical bases.
class Subspace {
 public:
  Subspace(FieldPtr f, std::size_t ambient);  // {0}
  static Subspace span(FieldPtr f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace whole(FieldPtr f, std::size_t ambient);

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t ambient() const noexcept { return d_; }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const FieldPtr& field_ptr() const noexcept { return f_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return d_ == o.d_ && basis_ == o.basis_; }

 private:
  FieldPtr f_;
  std::size_t d_;
  std::vector<Vec> basis_;
};

// Row-reduce in place; returns pivot columns.
std::vector<std::size_t> row_reduce(const Field& f, std::vector<Vec>& rows, std::size_t cols);
// basis of {c in F_q^cols : A c = 0}
std::vector<Vec> null_space(const Field& f, std::vector<Vec> rows, std::size_t cols);
std::size_t rank(const Field& f, std::vector<Vec> rows, std::size_t cols);

}  // namespace heis
