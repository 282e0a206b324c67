#include "heis/bijections.hpp"

#include "heis/error.hpp"

namespace heis {

Functional path_to_functional(const LabeledLatticePath& p, FieldPtr f, int n) {
  if (!in_family(p, PathFamily::heis_tilde, n, f->order()))
    throw NotInFamily("'" + serialize(p) + "' is not in the heis_tilde family for n = " + std::to_string(n));
  StrictUpperMatrix m(std::move(f), n);
  int d = 0;
  for (const auto& s : p.steps()) {
    const int i = d + 1;
    switch (s.kind) {
      case StepKind::R: break;
      case StepKind::U: m.set(i, i + 1, s.labels[0]); break;
      case StepKind::N: m.set(i, i + 2, s.labels[0]); break;
      case StepKind::UU:
        m.set(i - 1, i + 1, s.labels[0]);
        m.set(i, i + 2, s.labels[1]);
        break;
      default: break;
    }
    d += step_weight(s.kind);
  }
  return Functional(std::move(m));
}

BlockKind block_kind(const SquareMatrix& b) {
  const int m = b.size;
  if (m == 1) return BlockKind::a;
  bool super_full = true, other_zero = true;
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= m; ++c) {
      const Code v = b.at(r, c);
      if (c == r + 1) super_full = super_full && v != 0;
      else if (!(r == 1 && c == 1)) other_zero = other_zero && v == 0;
    }
  if (!super_full || !other_zero) return BlockKind::none;
  if (b.at(1, 1) == 0) return BlockKind::b;
  return m % 2 == 1 ? BlockKind::c : BlockKind::none;
}

char to_char(BlockKind k) {
  switch (k) {
    case BlockKind::a: return 'a';
    case BlockKind::b: return 'b';
    case BlockKind::c: return 'c';
    case BlockKind::none: return '-';
  }
  return '?';
}

std::string to_string(FunctionalClass c) {
  switch (c) {
    case FunctionalClass::class_Y: return "class_Y";
    case FunctionalClass::class_X: return "class_X";
    case FunctionalClass::neither: return "neither";
  }
  return "?";
}

Classification classify_functional(const Functional& lambda) {
  Classification out;
  out.blocks = block_decomposition(lambda);
  bool in_y = true;
  for (std::size_t k = 0; k < out.blocks.size(); ++k) {
    const BlockKind kind = block_kind(out.blocks[k]);
    out.kinds.push_back(kind);
    if (kind == BlockKind::none && !out.witness) out.witness = k;
    if (kind == BlockKind::c) in_y = false;
  }
  if (out.witness) out.cls = FunctionalClass::neither;
  else out.cls = in_y ? FunctionalClass::class_Y : FunctionalClass::class_X;
  return out;
}

LabeledLatticePath functional_to_path(const Functional& lambda) {
  const auto cl = classify_functional(lambda);
  if (cl.witness)
    throw NotClassX(*cl.witness, "block " + std::to_string(*cl.witness + 1) + " of " + pretty(lambda) +
                                     " is not of kind a, b or c");
  std::vector<Step> steps;
  for (std::size_t k = 0; k < cl.blocks.size(); ++k) {
    const auto& b = cl.blocks[k];
    const int m = b.size;
    auto t = [&b](int r) { return b.at(r, r + 1); };  // superdiagonal entry t_r
    switch (cl.kinds[k]) {
      case BlockKind::a:
        steps.push_back(b.at(1, 1) ? Step{StepKind::U, {b.at(1, 1), 0}} : Step{StepKind::R, {0, 0}});
        break;
      case BlockKind::b:
        if (m % 2 == 1) {
          steps.push_back(Step{StepKind::R, {0, 0}});
          for (int r = 1; r < m; r += 2) steps.push_back(Step{StepKind::UU, {t(r), t(r + 1)}});
        } else {
          steps.push_back(Step{StepKind::N, {t(1), 0}});
          for (int r = 2; r < m; r += 2) steps.push_back(Step{StepKind::UU, {t(r), t(r + 1)}});
        }
        break;
      case BlockKind::c:
        steps.push_back(Step{StepKind::U, {b.at(1, 1), 0}});
        for (int r = 1; r < m; r += 2) steps.push_back(Step{StepKind::UU, {t(r), t(r + 1)}});
        break;
      case BlockKind::none: break;
    }
  }
  return LabeledLatticePath(std::move(steps));
}

LabeledSetPartition pell_path_to_partition(const LabeledLatticePath& p, int n) {
  // a step from (x, y-1) to (x', y) gives the arc (x + y, x' + y + 1)
  std::vector<Arc> arcs;
  int x = 0, y = 0;
  for (const auto& s : p.steps()) {
    if (s.kind != StepKind::R && s.kind != StepKind::N && s.kind != StepKind::U)
      throw NotInFamily("'" + serialize(p) + "' is not a Pell path");
    const int x2 = x + step_dx(s.kind), y2 = y + step_dy(s.kind);
    if (s.kind != StepKind::R) arcs.push_back({x + y2, x2 + y2 + 1, s.labels[0]});
    x = x2;
    y = y2;
  }
  if (x + y != n - 1) throw NotInFamily("'" + serialize(p) + "' does not end on x + y = " + std::to_string(n - 1));
  return LabeledSetPartition(n, std::move(arcs));
}

int heis_degree_exponent(const LabeledLatticePath& p) {
  int e = 0;
  for (const auto& s : p.steps()) e += s.kind == StepKind::N || s.kind == StepKind::UU;
  return e;
}

bool is_c_invariant_heis_path(const LabeledLatticePath& p) {
  for (const auto& s : p.steps())
    if (s.kind != StepKind::N && s.kind != StepKind::UU) return false;
  return true;
}

bool is_c_invariant_partition(const LabeledSetPartition& p) {
  const int n = p.size();
  for (int j = 1; j < n; ++j) {
    bool ok = false;
    for (const auto& a : p.arcs())
      ok = ok || (a.j == j + 1 && a.i < j) || (a.i == j && a.j > j + 1);
    if (!ok) return false;
  }
  return true;
}

}  // namespace heis
