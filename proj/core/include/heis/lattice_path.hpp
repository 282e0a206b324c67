#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heis/gf.hpp"

namespace heis {

// Step vectors, in enumeration order:
// R (1,0), N (1,1), U (0,1), UU (0,2), H (2,1), V (1,2).
enum class StepKind : std::uint8_t { R, N, U, UU, H, V };

int step_dx(StepKind k) noexcept;
int step_dy(StepKind k) noexcept;  // also the number of labels
inline int step_weight(StepKind k) noexcept { return step_dx(k) + step_dy(k); }
std::string_view step_name(StepKind k) noexcept;

struct Step {
  StepKind kind = StepKind::R;
  std::array<Code, 2> labels{0, 0};  // first step_dy(kind) are used, rest 0
  auto operator<=>(const Step&) const = default;
};

Step make_step(StepKind k, Code a = 0, Code b = 0);  // validates label count

class LabeledLatticePath {
 public:
  LabeledLatticePath() = default;
  explicit LabeledLatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}
  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  int end_x() const noexcept;
  int end_y() const noexcept;
  int end_sum() const noexcept { return end_x() + end_y(); }
  auto operator<=>(const LabeledLatticePath&) const = default;

 private:
  std::vector<Step> steps_;
};

// pell: L_Pell(n); heis: L_Heis(n); heis_tilde: L_Heis(n) without a leading UU;
// inv: L_Inv(n); inv_tilde: nonempty paths of L_Inv(n) and L_Inv(n-1) that start with U.
// Paths of L_X(n) end on x + y = n - 1.
enum class PathFamily { pell, heis, heis_tilde, inv, inv_tilde };
PathFamily parse_path_family(std::string_view name);
std::string to_string(PathFamily f);
const std::vector<StepKind>& family_steps(PathFamily f);

bool in_family(const LabeledLatticePath& p, PathFamily f, int n, int q);

// Lazy enumeration in lexicographic order (steps compared by kind, then labels).
class PathStream {
 public:
  PathStream(PathFamily family, int n, int q);
  std::optional<LabeledLatticePath> next();
  std::size_t count();
  std::vector<LabeledLatticePath> collect();

 private:
  struct Cursor {
    std::size_t kind;   // index into family_steps
    std::size_t combo;  // label combination index
  };
  bool accept() const;

  PathFamily family_;
  int n_, q_;
  int min_target_, max_target_;
  const std::vector<StepKind>* kinds_;
  bool started_ = false;
  std::vector<Step> steps_;
  int sum_ = 0;
  std::vector<Cursor> stack_;
};

// Guarded by the advisory bound n <= 12.
PathStream enumerate_paths(PathFamily family, int n, int q);

// "R N(a) U(b) UU(c,d) H(e) V(f,g)"; the empty path is "()"
std::string serialize(const LabeledLatticePath& p);
LabeledLatticePath parse_path(std::string_view text);

}  // namespace heis
