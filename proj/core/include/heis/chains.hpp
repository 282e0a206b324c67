#pragma once

#include <vector>

#include "heis/linalg.hpp"
#include "heis/subspace.hpp"

namespace heis::oracle {

// l^{i+1} = {X in s^i : l(XY) = 0 for all Y in s^i}
// s^{i+1} = {X in s^i : l(XY) = 0 for all Y in l^{i+1}}
// Subspaces of u_n in the above-diagonal coordinates.
struct ChainResult {
  std::vector<Subspace> l_chain;  // l^0 = 0, l^1, ... up to stabilization
  std::vector<Subspace> s_chain;  // s^0 = u_n, s^1, ...
  const Subspace& l_bar() const { return l_chain.back(); }
  const Subspace& s_bar() const { return s_chain.back(); }
};

ChainResult ls_chain(const Functional& lambda);

struct XiStats {
  int degree_exponent;  // log_q |u_n| / |l_bar|
  bool irreducible;     // l_bar == s_bar
};
XiStats xi_stats(const Functional& lambda);

StrictUpperMatrix as_matrix(const Vec& v, const FieldPtr& f, int n);
Vec as_vector(const StrictUpperMatrix& m);
// closed under the matrix product
bool is_subalgebra(const Subspace& s, int n);

}  // namespace heis::oracle
