#pragma once

#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heis/polynomial.hpp"

namespace heis {

// Step sets: D uses (1,0),(0,1),(1,1); Dp adds (0,2); Dpp uses (0,1),(2,1),(1,2).
enum class DelannoyKind { D, Dp, Dpp };

// Path counts to (a, b) by dynamic programming; 0 for negative arguments.
BigInt delannoy(DelannoyKind kind, long long a, long long b);
// The binomial-sum expressions for the same numbers.
BigInt delannoy_binomial_sum(DelannoyKind kind, long long a, long long b);

BigInt stirling2(int n, int k);
// {{n,k}}: partitions of [n] into k blocks, none a singleton
BigInt associated_stirling2(int n, int k);
// N(n,k) counted as Dyck paths of semilength n with k peaks
BigInt narayana(int n, int k);
BigInt narayana_formula(int n, int k);  // C(n,k) C(n,k-1) / n
BigInt catalan(int n);
BigInt fibonacci(int n);

// Memoized two-index table for one of the arrays above.
class SequenceTable {
 public:
  enum class Kind { delannoy, delannoy_p, delannoy_pp, stirling2, associated_stirling2, narayana };
  explicit SequenceTable(Kind kind) : kind_(kind) {}
  Kind kind() const noexcept { return kind_; }
  BigInt value(long long a, long long b);
  BigInt recompute(long long a, long long b) const;
  std::size_t memo_size() const;

 private:
  Kind kind_;
  mutable std::mutex mu_;
  std::map<std::pair<long long, long long>, BigInt> memo_;
};

enum class Family { del, pre_he, pre_in, he, inv, bell, cat, fe, alt_bell, alt_cat, alt_del, alt_he };
Family parse_family(std::string_view name);
std::string to_string(Family f);
const std::vector<Family>& all_families();

// Polynomial in x = q - 1 from the defining sums.
IntPolynomial poly(Family f, int n);
bool has_closed_form(Family f);
// Binomial-sum evaluation; equal to poly(f, n) identically.
IntPolynomial closed_form(Family f, int n);

// c_0..c_N of the rational generating function of del, pre_he or pre_in at x.
std::vector<BigInt> series_coeffs(Family f, const BigInt& x, int N);

// Heisenberg characters of U_n of degree q^e, as a polynomial in x.
IntPolynomial degree_count(int n, int e);
BigInt degree_count(int n, int e, const BigInt& q);

enum class CInvMethod { compositions, recurrence };
// C-invariant Heisenberg characters of U_{n+1}(F_q).
BigInt c_invariant_heis_count(int n, int q, CInvMethod method);

// ((q-1)^(2d) - (-1)^d (q-1)^d) / q
BigInt tech_lem_count(int d, int q);

}  // namespace heis
