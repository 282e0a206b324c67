#pragma once

#include <cstdint>
#include <vector>

#include "heis/gf.hpp"
#include "heis/space.hpp"

namespace heis::oracle {

// Element of U_n / (1 + n^3): first and second superdiagonals.
// (ab).d1_i = a.d1_i + b.d1_i
// (ab).d2_i = a.d2_i + b.d2_i + a.d1_i b.d1_{i+1}
class TruncatedElement {
 public:
  TruncatedElement(FieldPtr f, int n);  // identity
  TruncatedElement(FieldPtr f, int n, std::vector<Code> d1, std::vector<Code> d2);

  int dim() const noexcept { return n_; }
  const std::vector<Code>& d1() const noexcept { return d1_; }
  const std::vector<Code>& d2() const noexcept { return d2_; }
  const FieldPtr& field_ptr() const noexcept { return f_; }

  TruncatedElement operator*(const TruncatedElement& o) const;
  TruncatedElement inverse() const;
  bool operator==(const TruncatedElement& o) const { return n_ == o.n_ && d1_ == o.d1_ && d2_ == o.d2_; }

  // mixed-radix code over (d1, d2)
  std::uint64_t code() const;
  static TruncatedElement from_code(FieldPtr f, int n, std::uint64_t c);

 private:
  FieldPtr f_;
  int n_;
  std::vector<Code> d1_, d2_;
};

struct GroupSpec {
  enum class Kind { truncated, truncated_alternating, unitriangular };
  Kind kind;
  int n, q;
};

struct ClassCensus {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> class_sizes;  // in order of smallest member code
  std::size_t classes() const noexcept { return class_sizes.size(); }
};

// Conjugation orbits by BFS under conjugation by a generating set.
ClassCensus conjugacy_classes(const GroupSpec& g);

}  // namespace heis::oracle
