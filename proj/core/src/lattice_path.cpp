#include "heis/lattice_path.hpp"

#include <sstream>

#include "heis/error.hpp"
#include "heis/limits.hpp"

namespace heis {

int step_dx(StepKind k) noexcept {
  switch (k) {
    case StepKind::R: return 1;
    case StepKind::N: return 1;
    case StepKind::U: return 0;
    case StepKind::UU: return 0;
    case StepKind::H: return 2;
    case StepKind::V: return 1;
  }
  return 0;
}

int step_dy(StepKind k) noexcept {
  switch (k) {
    case StepKind::R: return 0;
    case StepKind::N: return 1;
    case StepKind::U: return 1;
    case StepKind::UU: return 2;
    case StepKind::H: return 1;
    case StepKind::V: return 2;
  }
  return 0;
}

std::string_view step_name(StepKind k) noexcept {
  switch (k) {
    case StepKind::R: return "R";
    case StepKind::N: return "N";
    case StepKind::U: return "U";
    case StepKind::UU: return "UU";
    case StepKind::H: return "H";
    case StepKind::V: return "V";
  }
  return "?";
}

Step make_step(StepKind k, Code a, Code b) {
  const int dy = step_dy(k);
  if ((dy >= 1) != (a != 0) || (dy >= 2) != (b != 0))
    throw DomainError(std::string(step_name(k)) + " takes exactly " + std::to_string(dy) + " nonzero labels");
  return Step{k, {a, b}};
}

int LabeledLatticePath::end_x() const noexcept {
  int x = 0;
  for (const auto& s : steps_) x += step_dx(s.kind);
  return x;
}

int LabeledLatticePath::end_y() const noexcept {
  int y = 0;
  for (const auto& s : steps_) y += step_dy(s.kind);
  return y;
}

PathFamily parse_path_family(std::string_view name) {
  if (name == "pell") return PathFamily::pell;
  if (name == "heis") return PathFamily::heis;
  if (name == "heis_tilde") return PathFamily::heis_tilde;
  if (name == "inv") return PathFamily::inv;
  if (name == "inv_tilde") return PathFamily::inv_tilde;
  throw UnknownFamily("unknown path family '" + std::string(name) + "'");
}

std::string to_string(PathFamily f) {
  switch (f) {
    case PathFamily::pell: return "pell";
    case PathFamily::heis: return "heis";
    case PathFamily::heis_tilde: return "heis_tilde";
    case PathFamily::inv: return "inv";
    case PathFamily::inv_tilde: return "inv_tilde";
  }
  return "?";
}

const std::vector<StepKind>& family_steps(PathFamily f) {
  static const std::vector<StepKind> pell{StepKind::R, StepKind::N, StepKind::U};
  static const std::vector<StepKind> heis{StepKind::R, StepKind::N, StepKind::U, StepKind::UU};
  static const std::vector<StepKind> inv{StepKind::U, StepKind::H, StepKind::V};
  switch (f) {
    case PathFamily::pell: return pell;
    case PathFamily::heis:
    case PathFamily::heis_tilde: return heis;
    case PathFamily::inv:
    case PathFamily::inv_tilde: return inv;
  }
  return pell;
}

bool in_family(const LabeledLatticePath& p, PathFamily f, int n, int q) {
  const auto& kinds = family_steps(f);
  for (const auto& s : p.steps()) {
    bool ok = false;
    for (auto k : kinds) ok = ok || k == s.kind;
    if (!ok) return false;
    const int dy = step_dy(s.kind);
    for (int a = 0; a < 2; ++a) {
      const bool used = a < dy;
      if (used && (s.labels[a] == 0 || s.labels[a] >= q)) return false;
      if (!used && s.labels[a] != 0) return false;
    }
  }
  const int sum = p.end_sum();
  switch (f) {
    case PathFamily::pell:
    case PathFamily::heis:
    case PathFamily::inv: return sum == n - 1;
    case PathFamily::heis_tilde:
      return sum == n - 1 && (p.length() == 0 || p.steps().front().kind != StepKind::UU);
    case PathFamily::inv_tilde:
      return (sum == n - 1 || sum == n - 2) && p.length() > 0 && p.steps().front().kind == StepKind::U;
  }
  return false;
}

PathStream::PathStream(PathFamily family, int n, int q)
    : family_(family), n_(n), q_(q), kinds_(&family_steps(family)) {
  if (n < 1) throw DomainError("n must be >= 1");
  prime_power(q);
  max_target_ = n - 1;
  min_target_ = family == PathFamily::inv_tilde ? n - 2 : n - 1;
}

bool PathStream::accept() const {
  if (sum_ < min_target_ || sum_ > max_target_) return false;
  if (family_ == PathFamily::inv_tilde) return !steps_.empty();
  return true;
}

std::optional<LabeledLatticePath> PathStream::next() {
  const std::size_t qm = static_cast<std::size_t>(q_ - 1);
  auto combos = [qm](StepKind k) {
    std::size_t c = 1;
    for (int a = 0; a < step_dy(k); ++a) c *= qm;
    return c;
  };
  if (!started_) {
    started_ = true;
    stack_.push_back({0, 0});
    if (accept()) return LabeledLatticePath(steps_);
  }
  while (!stack_.empty()) {
    Cursor& c = stack_.back();
    bool found = false;
    while (c.kind < kinds_->size()) {
      const StepKind k = (*kinds_)[c.kind];
      bool allowed = sum_ + step_weight(k) <= max_target_ && c.combo < combos(k);
      if (allowed && steps_.empty()) {
        if (family_ == PathFamily::heis_tilde && k == StepKind::UU) allowed = false;
        if (family_ == PathFamily::inv_tilde && k != StepKind::U) allowed = false;
      }
      if (allowed) {
        found = true;
        break;
      }
      ++c.kind;
      c.combo = 0;
    }
    if (!found) {
      stack_.pop_back();
      if (!steps_.empty()) {
        sum_ -= step_weight(steps_.back().kind);
        steps_.pop_back();
      }
      continue;
    }
    const StepKind k = (*kinds_)[c.kind];
    Step s{k, {0, 0}};
    if (step_dy(k) == 1) {
      s.labels[0] = static_cast<Code>(1 + c.combo);
    } else if (step_dy(k) == 2) {
      s.labels[0] = static_cast<Code>(1 + c.combo / qm);
      s.labels[1] = static_cast<Code>(1 + c.combo % qm);
    }
    ++c.combo;
    steps_.push_back(s);
    sum_ += step_weight(k);
    stack_.push_back({0, 0});
    if (accept()) return LabeledLatticePath(steps_);
  }
  return std::nullopt;
}

std::size_t PathStream::count() {
  std::size_t k = 0;
  while (next()) ++k;
  return k;
}

std::vector<LabeledLatticePath> PathStream::collect() {
  std::vector<LabeledLatticePath> out;
  while (auto p = next()) out.push_back(std::move(*p));
  return out;
}

PathStream enumerate_paths(PathFamily family, int n, int q) {
  check_enumeration_size("enumerate_paths", n, kMaxPathN);
  return PathStream(family, n, q);
}

std::string serialize(const LabeledLatticePath& p) {
  if (p.length() == 0) return "()";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : p.steps()) {
    if (!first) os << ' ';
    first = false;
    os << step_name(s.kind);
    const int dy = step_dy(s.kind);
    if (dy == 1) os << '(' << static_cast<int>(s.labels[0]) << ')';
    if (dy == 2) os << '(' << static_cast<int>(s.labels[0]) << ',' << static_cast<int>(s.labels[1]) << ')';
  }
  return os.str();
}

LabeledLatticePath parse_path(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  std::vector<Step> steps;
  while (is >> tok) {
    if (tok == "()") continue;
    const auto open = tok.find('(');
    const std::string name = tok.substr(0, open);
    StepKind k;
    if (name == "R") k = StepKind::R;
    else if (name == "N") k = StepKind::N;
    else if (name == "U") k = StepKind::U;
    else if (name == "UU") k = StepKind::UU;
    else if (name == "H") k = StepKind::H;
    else if (name == "V") k = StepKind::V;
    else throw ParseError("unknown step '" + tok + "'");
    std::vector<int> labels;
    if (open != std::string::npos) {
      if (tok.back() != ')') throw ParseError("unterminated step '" + tok + "'");
      std::istringstream ls(tok.substr(open + 1, tok.size() - open - 2));
      std::string part;
      while (std::getline(ls, part, ',')) {
        try {
          labels.push_back(std::stoi(part));
        } catch (const std::exception&) {
          throw ParseError("bad label in '" + tok + "'");
        }
      }
    }
    if (static_cast<int>(labels.size()) != step_dy(k))
      throw ParseError("step '" + tok + "' needs " + std::to_string(step_dy(k)) + " labels");
    for (int l : labels)
      if (l < 1 || l > 255) throw ParseError("label out of range in '" + tok + "'");
    steps.push_back(Step{k, {labels.size() > 0 ? static_cast<Code>(labels[0]) : Code{0},
                             labels.size() > 1 ? static_cast<Code>(labels[1]) : Code{0}}});
  }
  return LabeledLatticePath(std::move(steps));
}

}  // namespace heis
