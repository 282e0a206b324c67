#include <gtest/gtest.h>

#include <set>

#include "brute.hpp"
#include "heis/counting.hpp"
#include "heis/error.hpp"
#include "heis/lattice_path.hpp"
#include "heis/limits.hpp"

using namespace heis;

namespace {

// labelled paths of a family from unlabelled step sequences
long long brute_count(PathFamily fam, int n, int q) {
  std::vector<std::pair<int, int>> steps;
  for (auto k : family_steps(fam)) steps.emplace_back(step_dx(k), step_dy(k));
  long long total = 0;
  auto add_target = [&](int target, bool need_first_up, bool forbid_first_uu, bool nonempty) {
    brute::step_sequences(steps, target, [&](const std::vector<std::pair<int, int>>& seq) {
      if (nonempty && seq.empty()) return;
      if (need_first_up && (seq.empty() || seq[0] != std::pair{0, 1})) return;
      if (forbid_first_uu && !seq.empty() && seq[0] == std::pair{0, 2}) return;
      int labels = 0;
      for (auto s : seq) labels += s.second;
      total += brute::ipow(q - 1, labels);
    });
  };
  switch (fam) {
    case PathFamily::pell:
    case PathFamily::heis:
    case PathFamily::inv: add_target(n - 1, false, false, false); break;
    case PathFamily::heis_tilde: add_target(n - 1, false, true, false); break;
    case PathFamily::inv_tilde:
      add_target(n - 1, true, false, true);
      if (n >= 2) add_target(n - 2, true, false, true);
      break;
  }
  return total;
}

Family poly_family(PathFamily f) {
  switch (f) {
    case PathFamily::pell: return Family::del;
    case PathFamily::heis: return Family::pre_he;
    case PathFamily::heis_tilde: return Family::he;
    case PathFamily::inv: return Family::pre_in;
    case PathFamily::inv_tilde: return Family::inv;
  }
  return Family::del;
}

const PathFamily kFamilies[] = {PathFamily::pell, PathFamily::heis, PathFamily::heis_tilde, PathFamily::inv,
                                PathFamily::inv_tilde};

}  // namespace

TEST(Steps, Geometry) {
  EXPECT_EQ(step_dx(StepKind::H), 2);
  EXPECT_EQ(step_dy(StepKind::V), 2);
  EXPECT_EQ(step_weight(StepKind::N), 2);
  EXPECT_THROW(make_step(StepKind::UU, 1), DomainError);
  EXPECT_THROW(make_step(StepKind::R, 1), DomainError);
  const LabeledLatticePath p({make_step(StepKind::R), make_step(StepKind::UU, 1, 2), make_step(StepKind::H, 1)});
  EXPECT_EQ(p.end_x(), 3);
  EXPECT_EQ(p.end_y(), 3);
}

TEST(Stream, SpecExamples) {
  EXPECT_EQ(PathStream(PathFamily::heis_tilde, 3, 2).count(), 5u);
  EXPECT_EQ(PathStream(PathFamily::pell, 3, 2).count(), 5u);
  EXPECT_EQ(PathStream(PathFamily::pell, 4, 2).count(), 12u);
  int vertical = 0;
  for (const auto& p : PathStream(PathFamily::heis, 4, 2).collect()) vertical += p.end_x() == 0 && p.end_y() == 3;
  EXPECT_EQ(vertical, 3);
}

TEST(Stream, EmptyPathMembership) {
  for (auto f : {PathFamily::pell, PathFamily::heis, PathFamily::heis_tilde, PathFamily::inv})
    EXPECT_EQ(PathStream(f, 1, 3).collect(), std::vector<LabeledLatticePath>{LabeledLatticePath()});
  EXPECT_EQ(PathStream(PathFamily::inv_tilde, 1, 3).count(), 0u);
}

class PathStreamVsBrute : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(PathStreamVsBrute, EveryFamily) {
  const auto [n, q] = GetParam();
  for (auto fam : kFamilies) {
    const auto all = PathStream(fam, n, q).collect();
    EXPECT_EQ(static_cast<long long>(all.size()), brute_count(fam, n, q)) << to_string(fam);
    EXPECT_EQ(BigInt(all.size()), poly(poly_family(fam), n)(q - 1)) << to_string(fam);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    std::set<std::string> seen;
    for (const auto& p : all) {
      EXPECT_TRUE(in_family(p, fam, n, q));
      for (const auto& s : p.steps()) {
        const int dy = step_dy(s.kind);
        for (int a = 0; a < 2; ++a) EXPECT_EQ(s.labels[a] != 0, a < dy);
      }
      const int sum = p.end_sum();
      EXPECT_TRUE(sum == n - 1 || (fam == PathFamily::inv_tilde && sum == n - 2));
      EXPECT_TRUE(seen.insert(serialize(p)).second);
      EXPECT_EQ(parse_path(serialize(p)), p);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, PathStreamVsBrute,
                         ::testing::Combine(::testing::Range(1, 8), ::testing::Values(2, 3, 4)));

TEST(Stream, LazyPrefixMatchesCollect) {
  PathStream a(PathFamily::heis, 7, 3);
  const auto all = PathStream(PathFamily::heis, 7, 3).collect();
  for (std::size_t k = 0; k < 20; ++k) EXPECT_EQ(a.next(), all[k]);
}

TEST(Stream, SizeGuard) {
  EXPECT_THROW(enumerate_paths(PathFamily::heis, kMaxPathN + 1, 2), SpaceTooLarge);
  EXPECT_NO_THROW(enumerate_paths(PathFamily::heis, 5, 2));
}

TEST(Serialization, Path) {
  const LabeledLatticePath p({make_step(StepKind::R), make_step(StepKind::N, 2), make_step(StepKind::U, 1),
                              make_step(StepKind::UU, 1, 3), make_step(StepKind::H, 2), make_step(StepKind::V, 1, 1)});
  EXPECT_EQ(serialize(p), "R N(2) U(1) UU(1,3) H(2) V(1,1)");
  EXPECT_EQ(parse_path(serialize(p)), p);
  EXPECT_EQ(serialize(LabeledLatticePath()), "()");
  EXPECT_EQ(parse_path("()"), LabeledLatticePath());
  EXPECT_THROW(parse_path("X"), ParseError);
  EXPECT_THROW(parse_path("UU(1)"), ParseError);
  EXPECT_THROW(parse_path("N(0)"), ParseError);
  EXPECT_THROW(parse_path_family("nope"), UnknownFamily);
}
