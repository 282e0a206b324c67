#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heis/gf.hpp"

namespace heis {

// Indices are 1-based throughout: entry (i, j) with 1 <= i < j <= n.

// Strictly upper triangular n x n matrix; above-diagonal entries stored
// densely in row-major order (1,2), (1,3), ..., (n-1,n).
class StrictUpperMatrix {
 public:
  StrictUpperMatrix(FieldPtr f, int n);
  StrictUpperMatrix(FieldPtr f, int n, std::vector<Code> entries);
  static StrictUpperMatrix elementary(FieldPtr f, int n, int i, int j, Code t = 1);

  int dim() const noexcept { return n_; }
  const Field& field() const noexcept { return *f_; }
  const FieldPtr& field_ptr() const noexcept { return f_; }

  Code at(int i, int j) const;  // 0 for i >= j
  void set(int i, int j, Code v);
  std::span<const Code> entries() const noexcept { return e_; }
  std::span<Code> entries() noexcept { return e_; }
  bool is_zero() const noexcept;

  static std::size_t size_for(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }
  static std::size_t index(int n, int i, int j) {
    return static_cast<std::size_t>(i - 1) * (2 * n - i) / 2 + (j - i - 1);
  }
  // inverse of index(): position k -> (i, j)
  static std::pair<int, int> position(int n, std::size_t k);

  StrictUpperMatrix operator+(const StrictUpperMatrix& o) const;
  StrictUpperMatrix operator-(const StrictUpperMatrix& o) const;
  StrictUpperMatrix operator*(const StrictUpperMatrix& o) const;
  StrictUpperMatrix scaled(Code t) const;
  bool operator==(const StrictUpperMatrix& o) const;

 private:
  void check(const StrictUpperMatrix& o) const;
  FieldPtr f_;
  int n_;
  std::vector<Code> e_;
};

// g = 1 + X with X strictly upper triangular.
class UnitriangularElement {
 public:
  explicit UnitriangularElement(StrictUpperMatrix above) : x_(std::move(above)) {}
  static UnitriangularElement identity(FieldPtr f, int n) { return UnitriangularElement(StrictUpperMatrix(std::move(f), n)); }
  const StrictUpperMatrix& above() const noexcept { return x_; }
  int dim() const noexcept { return x_.dim(); }
  bool operator==(const UnitriangularElement& o) const { return x_ == o.x_; }

 private:
  StrictUpperMatrix x_;
};

UnitriangularElement group_mul(const UnitriangularElement& a, const UnitriangularElement& b);
UnitriangularElement group_inv(const UnitriangularElement& g);
// sum of the superdiagonal entries; a homomorphism to (F_q, +)
Code sigma(const UnitriangularElement& g);

// lambda(Y) = sum m_ij Y_ij; the matrix of lambda has entries lambda(e_ij).
class Functional {
 public:
  explicit Functional(StrictUpperMatrix m) : m_(std::move(m)) {}
  static Functional zero(FieldPtr f, int n) { return Functional(StrictUpperMatrix(std::move(f), n)); }
  // t * e*_{ij}
  static Functional dual(FieldPtr f, int n, int i, int j, Code t = 1);
  // sum of e*_{i,i+1}
  static Functional gamma(FieldPtr f, int n);

  const StrictUpperMatrix& matrix() const noexcept { return m_; }
  StrictUpperMatrix& matrix() noexcept { return m_; }
  int dim() const noexcept { return m_.dim(); }
  Code at(int i, int j) const { return m_.at(i, j); }
  Code operator()(const StrictUpperMatrix& y) const;

  Functional operator+(const Functional& o) const { return Functional(m_ + o.m_); }
  Functional operator-(const Functional& o) const { return Functional(m_ - o.m_); }
  Functional scaled(Code t) const { return Functional(m_.scaled(t)); }
  bool operator==(const Functional& o) const { return m_ == o.m_; }

 private:
  StrictUpperMatrix m_;
};

enum class Action { left, right, coadjoint };

// left: (g.l)(X) = l(g^-1 X); right: (l.g)(X) = l(X g^-1); coadjoint: g.l.g^-1.
// Computed by evaluating on every e_ij.
Functional act(Action mode, const UnitriangularElement& g, const Functional& lambda);

// {(i, j) : j >= i + k}, the positions spanning n^k
std::vector<std::pair<int, int>> ideal_positions(int n, int k);

// Dense square matrix, 1-based access.
struct SquareMatrix {
  int size = 0;
  std::vector<Code> data;
  SquareMatrix() = default;
  explicit SquareMatrix(int m) : size(m), data(static_cast<std::size_t>(m) * m, 0) {}
  Code at(int r, int c) const { return data[static_cast<std::size_t>(r - 1) * size + (c - 1)]; }
  Code& at(int r, int c) { return data[static_cast<std::size_t>(r - 1) * size + (c - 1)]; }
  bool operator==(const SquareMatrix&) const = default;
};

// Drop first column and last row: U[a][b] = X[a][b+1], an (n-1) x (n-1) upper triangular matrix.
SquareMatrix upper_form(const StrictUpperMatrix& x);
StrictUpperMatrix from_upper_form(FieldPtr f, const SquareMatrix& u);

// Finest block-diagonal splitting of upper_form(lambda).
std::vector<SquareMatrix> block_decomposition(const Functional& lambda);
SquareMatrix block_diagonal(const std::vector<SquareMatrix>& blocks);

// "n q c12 c13 ... c(n-1)n"
std::string serialize(const Functional& lambda);
Functional parse_functional(std::string_view text);
// e.g. "2*e(1,3) + e(2,4)"; "0" for the zero functional
std::string pretty(const Functional& lambda);

}  // namespace heis
