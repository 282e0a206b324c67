#include "heis/chains.hpp"

namespace heis::oracle {

StrictUpperMatrix as_matrix(const Vec& v, const FieldPtr& f, int n) { return StrictUpperMatrix(f, n, v); }

Vec as_vector(const StrictUpperMatrix& m) { return Vec(m.entries().begin(), m.entries().end()); }

namespace {

// {X in span(xs) : l(X Y) = 0 for all Y in ys}
Subspace annihilated(const Functional& lambda, const std::vector<StrictUpperMatrix>& xs,
                     const std::vector<StrictUpperMatrix>& ys) {
  const auto& f = lambda.matrix().field_ptr();
  const std::size_t N = StrictUpperMatrix::size_for(lambda.dim());
  std::vector<Vec> rows;
  for (const auto& y : ys) {
    Vec row;
    for (const auto& x : xs) row.push_back(lambda(x * y));
    rows.push_back(std::move(row));
  }
  std::vector<Vec> out;
  for (const auto& c : null_space(*f, rows, xs.size())) {
    StrictUpperMatrix s(f, lambda.dim());
    for (std::size_t a = 0; a < xs.size(); ++a)
      if (c[a]) s = s + xs[a].scaled(c[a]);
    out.push_back(as_vector(s));
  }
  return Subspace::span(f, N, out);
}

std::vector<StrictUpperMatrix> matrices(const Subspace& s, const FieldPtr& f, int n) {
  std::vector<StrictUpperMatrix> out;
  for (const auto& v : s.basis()) out.push_back(as_matrix(v, f, n));
  return out;
}

}  // namespace

ChainResult ls_chain(const Functional& lambda) {
  const auto& f = lambda.matrix().field_ptr();
  const int n = lambda.dim();
  const std::size_t N = StrictUpperMatrix::size_for(n);
  ChainResult r;
  r.l_chain.push_back(Subspace(f, N));
  r.s_chain.push_back(Subspace::whole(f, N));
  for (;;) {
    const auto s = matrices(r.s_chain.back(), f, n);
    Subspace l_next = annihilated(lambda, s, s);
    Subspace s_next = annihilated(lambda, s, matrices(l_next, f, n));
    if (l_next == r.l_chain.back() && s_next == r.s_chain.back()) break;
    r.l_chain.push_back(std::move(l_next));
    r.s_chain.push_back(std::move(s_next));
  }
  return r;
}

XiStats xi_stats(const Functional& lambda) {
  const auto r = ls_chain(lambda);
  const auto N = static_cast<int>(StrictUpperMatrix::size_for(lambda.dim()));
  return {N - static_cast<int>(r.l_bar().dim()), r.l_bar() == r.s_bar()};
}

bool is_subalgebra(const Subspace& s, int n) {
  const auto m = matrices(s, s.field_ptr(), n);
  for (const auto& a : m)
    for (const auto& b : m)
      if (!s.contains(as_vector(a * b))) return false;
  return true;
}

}  // namespace heis::oracle
