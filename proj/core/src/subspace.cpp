#include "heis/subspace.hpp"

#include "heis/error.hpp"

namespace heis {

std::vector<std::size_t> row_reduce(const Field& f, std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Code s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const Code m = rows[k][c];
      for (std::size_t j = 0; j < cols; ++j) rows[k][j] = f.sub(rows[k][j], f.mul(m, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vec> null_space(const Field& f, std::vector<Vec> rows, std::size_t cols) {
  for (const auto& row : rows)
    if (row.size() != cols) throw DimensionMismatch("row length differs from column count");
  const auto pivots = row_reduce(f, rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(rows[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Field& f, std::vector<Vec> rows, std::size_t cols) {
  return row_reduce(f, rows, cols).size();
}

Subspace::Subspace(FieldPtr f, std::size_t ambient) : f_(std::move(f)), d_(ambient) {}

Subspace Subspace::span(FieldPtr f, std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(std::move(f), ambient);
  s.basis_ = vectors;
  for (const auto& v : s.basis_)
    if (v.size() != ambient) throw DimensionMismatch("vector length differs from ambient dimension");
  row_reduce(*s.f_, s.basis_, ambient);
  return s;
}

Subspace Subspace::whole(FieldPtr f, std::size_t ambient) {
  std::vector<Vec> id(ambient, Vec(ambient, 0));
  for (std::size_t k = 0; k < ambient; ++k) id[k][k] = 1;
  return span(std::move(f), ambient, id);
}

bool Subspace::contains(const Vec& v) const {
  auto rows = basis_;
  rows.push_back(v);
  return rank(*f_, std::move(rows), d_) == basis_.size();
}

bool Subspace::contains(const Subspace& o) const {
  auto rows = basis_;
  rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
  return rank(*f_, std::move(rows), d_) == basis_.size();
}

}  // namespace heis
