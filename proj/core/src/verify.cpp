#include "heis/verify.hpp"

#include <map>

#include "heis/bijections.hpp"
#include "heis/census.hpp"
#include "heis/counting.hpp"
#include "heis/error.hpp"

namespace heis::verify {

namespace {

struct Recorder {
  std::string theorem;
  int n, q;
  std::vector<Check> out;
  void operator()(const std::string& name, const BigInt& expected, const BigInt& computed) {
    out.push_back({theorem, n, q, name, expected.str(), computed.str(), expected == computed});
  }
};

BigInt at(Family f, int n, int q) { return poly(f, n)(BigInt(q - 1)); }

std::uint64_t count_paths(PathFamily f, int n, int q) { return enumerate_paths(f, n, q).count(); }
std::uint64_t count_parts(PartitionFilter f, int n, int q) { return enumerate_partitions(n, q, f).count(); }

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"bell-thm", "heis-thm", "del-thm", "deg-cor", "fe-thm",
                                            "c-irr-thm", "c-heis-thm", "tech-lem1", "alt-thm"};
  return ids;
}

std::vector<Check> run(const std::string& theorem, int n, int q) {
  Recorder rec{theorem, n, q, {}};
  using oracle::GroupKind;
  if (theorem == "bell-thm") {
    const auto s = oracle::count_supercharacter_families(n, q, GroupKind::full);
    rec("supercharacters (oracle)", at(Family::bell, n, q), s.supercharacters);
    rec("supercharacters (partitions)", at(Family::bell, n, q), count_parts(PartitionFilter::all, n, q));
    rec("irreducible supercharacters (oracle)", at(Family::cat, n, q), s.irreducible_supercharacters);
    rec("irreducible supercharacters (noncrossing)", at(Family::cat, n, q),
        count_parts(PartitionFilter::noncrossing, n, q));
  } else if (theorem == "heis-thm") {
    const BigInt he = at(Family::he, n, q);
    rec("heisenberg characters (quotient classes)", he,
        oracle::count_heisenberg_characters(n, q, oracle::HeisMethod::quotient_classes).count);
    rec("heisenberg characters (xi census)", he,
        oracle::count_heisenberg_characters(n, q, oracle::HeisMethod::xi_census).count);
    rec("heisenberg characters (heis_tilde paths)", he, count_paths(PathFamily::heis_tilde, n, q));
    rec("closed form", he, closed_form(Family::he, n)(BigInt(q - 1)));
  } else if (theorem == "del-thm") {
    const BigInt del = at(Family::del, n, q);
    rec("heisenberg supercharacters (oracle)", del,
        oracle::count_supercharacter_families(n, q, GroupKind::full).heisenberg_supercharacters);
    rec("heisenberg supercharacters (pell paths)", del, count_paths(PathFamily::pell, n, q));
    std::uint64_t good = 0;
    auto paths = enumerate_paths(PathFamily::pell, n, q);
    auto f = Field::make(q);
    while (auto p = paths.next()) {
      const auto part = pell_path_to_partition(*p, n);
      bool ok = is_noncrossing(part);
      for (const auto& a : part.arcs()) ok = ok && a.j - a.i <= 2;
      good += ok;
    }
    rec("pell images noncrossing on short arcs", del, good);
    std::uint64_t nc_short = 0;
    auto parts = enumerate_partitions(n, q, PartitionFilter::heis_support);
    while (auto p = parts.next()) nc_short += is_noncrossing(*p);
    rec("noncrossing partitions on short arcs", del, nc_short);
  } else if (theorem == "deg-cor") {
    if (n < 2) throw DomainError("deg-cor needs n >= 2");
    std::map<int, std::uint64_t> by_path;
    auto paths = enumerate_paths(PathFamily::heis_tilde, n, q);
    while (auto p = paths.next()) ++by_path[heis_degree_exponent(*p)];
    const auto xi = oracle::count_heisenberg_characters(n, q, oracle::HeisMethod::xi_census);
    for (int e = 0; e <= n; ++e) {
      const BigInt expected = degree_count(n, e, BigInt(q));
      if (expected == 0 && !by_path.count(e) && !xi.degree_histogram.count(e)) continue;
      const std::string tag = "degree q^" + std::to_string(e);
      rec(tag + " (paths)", expected, by_path.count(e) ? by_path.at(e) : 0);
      rec(tag + " (xi census)", expected, xi.degree_histogram.count(e) ? xi.degree_histogram.at(e) : 0);
    }
  } else if (theorem == "fe-thm") {
    const BigInt fe = at(Family::fe, n, q);
    rec("C-invariant supercharacters of U_{n+1} (oracle)", fe,
        oracle::count_c_invariant(n + 1, q, oracle::CInvKind::supercharacters));
    rec("feasible partitions", fe, count_parts(PartitionFilter::feasible, n, q));
    std::uint64_t arcs = 0;
    auto parts = enumerate_partitions(n + 1, q, PartitionFilter::all);
    while (auto p = parts.next()) arcs += is_c_invariant_partition(*p);
    rec("arc predicate on partitions of [n+1]", fe, arcs);
  } else if (theorem == "c-irr-thm") {
    const BigInt x = q - 1;
    const BigInt sign = ipow(-x, n / 2);
    const BigInt cat_expected = n % 2 == 0 ? ipow(x, n / 2) * catalan(n / 2) : BigInt(0);
    const BigInt del_expected = n % 2 == 0 ? ipow(x, n / 2) : BigInt(0);
    rec("C-invariant irreducible supercharacters (oracle)", cat_expected,
        oracle::count_c_invariant(n + 1, q, oracle::CInvKind::irreducible_supercharacters));
    rec("(1-q)^[n/2] Cat_{n+1}(-1)", cat_expected, sign * poly(Family::cat, n + 1)(BigInt(-1)));
    rec("C-invariant heisenberg supercharacters (oracle)", del_expected,
        oracle::count_c_invariant(n + 1, q, oracle::CInvKind::heisenberg_supercharacters));
    rec("(1-q)^[n/2] Del_{n+1}(-1)", del_expected, sign * poly(Family::del, n + 1)(BigInt(-1)));
  } else if (theorem == "c-heis-thm") {
    const BigInt in = at(Family::inv, n, q);
    rec("C-invariant heisenberg characters of U_{n+1} (oracle)", in,
        oracle::count_c_invariant(n + 1, q, oracle::CInvKind::heisenberg_characters));
    rec("compositions", in, c_invariant_heis_count(n, q, CInvMethod::compositions));
    rec("recurrence", in, c_invariant_heis_count(n, q, CInvMethod::recurrence));
    rec("inv_tilde paths", in, count_paths(PathFamily::inv_tilde, n, q));
    std::uint64_t cinv = 0;
    auto paths = enumerate_paths(PathFamily::heis_tilde, n + 1, q);
    while (auto p = paths.next()) cinv += is_c_invariant_heis_path(*p);
    if (n % 2 == 0 && n >= 2) {
      const int k = n / 2;
      rec("heis_tilde paths of N and UU steps", ipow(BigInt(q), k - 1) * ipow(BigInt(q - 1), k), cinv);
    }
  } else if (theorem == "tech-lem1") {
    rec("tuples with l_t + gamma in the coadjoint orbit", tech_lem_count(n, q), oracle::tech_lem1_bruteforce(n, q));
  } else if (theorem == "alt-thm") {
    if (n < 2) throw DomainError("alt-thm needs n >= 2");
    const auto h = oracle::count_supercharacter_families(n, q, GroupKind::alternating);
    rec("supercharacters of U^sigma_n", at(Family::alt_bell, n, q), h.supercharacters);
    rec("irreducible supercharacters of U^sigma_n", at(Family::alt_cat, n, q), h.irreducible_supercharacters);
    rec("heisenberg supercharacters of U^sigma_n", at(Family::alt_del, n, q), h.heisenberg_supercharacters);
    rec("heisenberg characters of U^sigma_n", at(Family::alt_he, n, q),
        oracle::count_heisenberg_characters(n, q, oracle::HeisMethod::quotient_classes, GroupKind::alternating).count);
    const auto g = oracle::count_supercharacter_families(n, q, GroupKind::full);
    const auto cinv = oracle::count_c_invariant(n, q, oracle::CInvKind::supercharacters);
    // #H = #Cinv + (#G - #Cinv)/q, kept in integers
    rec("q * (#H - #C-invariant) = #G - #C-invariant", BigInt(g.supercharacters) - cinv,
        q * (BigInt(h.supercharacters) - cinv));
    for (Family f : {Family::alt_bell, Family::alt_cat, Family::alt_del, Family::alt_he}) {
      const auto p = poly(f, n);
      rec(to_string(f) + " nonnegative coefficients", 1, p.has_nonnegative_coefficients() ? 1 : 0);
    }
  } else {
    throw UnknownFamily("unknown theorem id '" + theorem + "'");
  }
  return rec.out;
}

}  // namespace heis::verify
