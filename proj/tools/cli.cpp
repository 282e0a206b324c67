#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "heis/bijections.hpp"
#include "heis/census.hpp"
#include "heis/counting.hpp"
#include "heis/error.hpp"
#include "heis/verify.hpp"

namespace heis::cli {

std::vector<int> parse_range(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string part;
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw ParseError("bad range element '" + s + "' in '" + spec + "'");
    return v;
  };
  while (std::getline(ss, part, ',')) {
    const auto dash = part.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(num(part));
      continue;
    }
    const int lo = num(part.substr(0, dash)), hi = num(part.substr(dash + 1));
    if (hi < lo) throw ParseError("empty range '" + part + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty range '" + spec + "'");
  return out;
}

namespace {

Record big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

// integers stay integers
Record scalar(const std::string& s) {
  const bool neg = !s.empty() && s[0] == '-';
  if (s.size() > static_cast<std::size_t>(neg) && s.find_first_not_of("0123456789", neg) == std::string::npos)
    return big(BigInt(s));
  return s;
}

Record coeffs(const IntPolynomial& p) {
  Record a = Record::array();
  for (const auto& c : p.coefficients()) a.push_back(big(c));
  return a;
}

// count/poly family names: polynomial names plus the object each one counts
Family count_family(const std::string& name) {
  static const std::map<std::string, Family> alias{
      {"heis", Family::he},       {"heis_tilde", Family::he},    {"pell", Family::del},
      {"inv_tilde", Family::inv}, {"all", Family::bell},         {"noncrossing", Family::cat},
      {"feasible", Family::fe},   {"heis_paths", Family::pre_he}, {"inv_paths", Family::pre_in},
      {"heis_support", Family::del}};
  if (auto it = alias.find(name); it != alias.end()) return it->second;
  return parse_family(name);
}

enum class Method { poly, closed, enumerate, oracle };

Method parse_method(const std::string& m) {
  if (m == "poly") return Method::poly;
  if (m == "closed") return Method::closed;
  if (m == "enumerate") return Method::enumerate;
  if (m == "oracle") return Method::oracle;
  throw ParseError("unknown method '" + m + "'");
}

BigInt count_by_enumeration(Family f, int n, int q) {
  switch (f) {
    case Family::del: return PathStream(PathFamily::pell, n, q).count();
    case Family::pre_he: return PathStream(PathFamily::heis, n, q).count();
    case Family::he: return PathStream(PathFamily::heis_tilde, n, q).count();
    case Family::pre_in: return PathStream(PathFamily::inv, n, q).count();
    case Family::inv: return PathStream(PathFamily::inv_tilde, n, q).count();
    case Family::bell: return PartitionStream(n, q, PartitionFilter::all).count();
    case Family::cat: return PartitionStream(n, q, PartitionFilter::noncrossing).count();
    case Family::fe: return PartitionStream(n, q, PartitionFilter::feasible).count();
    default: throw UnknownFamily(to_string(f) + " has no enumeration");
  }
}

BigInt count_by_oracle(Family f, int n, int q) {
  using namespace oracle;
  switch (f) {
    case Family::bell: return count_supercharacter_families(n, q, GroupKind::full).supercharacters;
    case Family::cat: return count_supercharacter_families(n, q, GroupKind::full).irreducible_supercharacters;
    case Family::del: return count_supercharacter_families(n, q, GroupKind::full).heisenberg_supercharacters;
    case Family::he: return count_heisenberg_characters(n, q, HeisMethod::quotient_classes).count;
    case Family::fe: return count_c_invariant(n + 1, q, CInvKind::supercharacters);
    case Family::inv: return count_c_invariant(n + 1, q, CInvKind::heisenberg_characters);
    case Family::alt_bell: return count_supercharacter_families(n, q, GroupKind::alternating).supercharacters;
    case Family::alt_cat:
      return count_supercharacter_families(n, q, GroupKind::alternating).irreducible_supercharacters;
    case Family::alt_del:
      return count_supercharacter_families(n, q, GroupKind::alternating).heisenberg_supercharacters;
    case Family::alt_he:
      return count_heisenberg_characters(n, q, HeisMethod::quotient_classes, GroupKind::alternating).count;
    default: throw UnknownFamily(to_string(f) + " has no oracle count");
  }
}

Records cmd_count(const std::string& family, const std::string& ns, const std::string& qs, const std::string& method) {
  const Family f = count_family(family);
  const Method m = parse_method(method);
  Records out;
  for (int n : parse_range(ns))
    for (int q : parse_range(qs)) {
      prime_power(q);
      BigInt v;
      switch (m) {
        case Method::poly: v = poly(f, n)(BigInt(q - 1)); break;
        case Method::closed: v = closed_form(f, n)(BigInt(q - 1)); break;
        case Method::enumerate: v = count_by_enumeration(f, n, q); break;
        case Method::oracle: v = count_by_oracle(f, n, q); break;
      }
      out.push_back({{"family", to_string(f)}, {"n", n}, {"q", q}, {"value", big(v)}});
    }
  return out;
}

Records cmd_poly(const std::string& family, const std::string& ns, const std::optional<std::string>& xs,
                 const std::string& var, bool closed) {
  const Family f = count_family(family);
  if (var != "x" && var != "q") throw ParseError("--var is x or q");
  Records out;
  for (int n : parse_range(ns)) {
    const IntPolynomial p = closed ? closed_form(f, n) : poly(f, n);
    const IntPolynomial shown = var == "q" ? p.in_q() : p;
    Record base{{"family", to_string(f)}, {"n", n}, {"var", var}, {"coefficients", coeffs(shown)},
                {"polynomial", shown.to_string(var)}};
    if (!xs) {
      out.push_back(base);
      continue;
    }
    for (int x : parse_range(*xs)) {
      Record r = base;
      r["x"] = x;
      r["value"] = big(p(BigInt(x)));
      out.push_back(r);
    }
  }
  return out;
}

std::optional<PathFamily> path_family(const std::string& s) {
  try {
    return parse_path_family(s);
  } catch (const UnknownFamily&) {
    return std::nullopt;
  }
}

Records cmd_enumerate(const std::string& family, const std::string& ns, const std::string& qs, long long limit) {
  const auto pf = path_family(family);
  const auto filter = pf ? PartitionFilter::all : parse_partition_filter(family);
  Records out;
  for (int n : parse_range(ns))
    for (int q : parse_range(qs)) {
      auto add = [&](long long index, const std::string& item) {
        out.push_back({{"family", family}, {"n", n}, {"q", q}, {"index", index}, {"item", item}});
      };
      long long k = 0;
      if (pf) {
        auto s = enumerate_paths(*pf, n, q);
        while (limit < 0 || k < limit) {
          auto p = s.next();
          if (!p) break;
          add(k++, serialize(*p));
        }
      } else {
        auto s = enumerate_partitions(n, q, filter);
        while (limit < 0 || k < limit) {
          auto p = s.next();
          if (!p) break;
          add(k++, serialize(*p));
        }
      }
    }
  return out;
}

std::string kinds_text(const Classification& c) {
  std::string s;
  for (auto k : c.kinds) s += to_char(k);
  return s;
}

Records cmd_map(const std::string& kind, const std::string& input, int n, int q) {
  Record r{{"map", kind}, {"input", input}};
  if (kind == "path-to-functional") {
    if (n < 1 || q < 2) throw ParseError("path-to-functional needs --n and --q");
    r["output"] = serialize(path_to_functional(parse_path(input), Field::make(q), n));
  } else if (kind == "functional-to-path") {
    r["output"] = serialize(functional_to_path(parse_functional(input)));
  } else if (kind == "pell-to-partition") {
    if (n < 1) throw ParseError("pell-to-partition needs --n");
    r["output"] = serialize(pell_path_to_partition(parse_path(input), n));
  } else if (kind == "partition-to-functional") {
    if (n < 1 || q < 2) throw ParseError("partition-to-functional needs --n and --q");
    r["output"] = serialize(partition_to_functional(parse_partition(input, n), Field::make(q)));
  } else if (kind == "functional-to-partition") {
    r["output"] = serialize(functional_to_partition(parse_functional(input)));
  } else if (kind == "classify") {
    const auto c = classify_functional(parse_functional(input));
    r["output"] = to_string(c.cls);
    r["blocks"] = kinds_text(c);
  } else if (kind == "degree") {
    const auto l = parse_functional(input);
    const auto s = oracle::xi_stats(l);
    r["output"] = s.degree_exponent;
    r["irreducible"] = s.irreducible;
  } else {
    throw ParseError("unknown map '" + kind + "'");
  }
  return {r};
}

Records cmd_verify(const std::string& theorem, const std::string& ns, const std::string& qs, bool& all_pass) {
  std::vector<std::string> ids;
  if (theorem == "all") ids = verify::theorem_ids();
  else ids.push_back(theorem);
  Records out;
  all_pass = true;
  for (const auto& id : ids)
    for (int n : parse_range(ns))
      for (int q : parse_range(qs))
        for (const auto& c : verify::run(id, n, q)) {
          all_pass = all_pass && c.pass;
          out.push_back({{"theorem", c.theorem},
                         {"n", c.n},
                         {"q", c.q},
                         {"check", c.name},
                         {"expected", scalar(c.expected)},
                         {"computed", scalar(c.computed)},
                         {"pass", c.pass}});
        }
  return out;
}

Records cmd_sequences(int terms) {
  struct Seq {
    std::string name, oeis;
    int offset;
    std::function<BigInt(int)> term;
  };
  auto P = [](Family f, long long x) { return [f, x](int n) { return poly(f, n)(BigInt(x)); }; };
  const std::vector<Seq> seqs{
      {"heisenberg_characters_q2", "A052945", 1, P(Family::he, 1)},
      {"pell", "A000129", 0, P(Family::del, 1)},
      {"heisenberg_supercharacters_q3", "A007482", 0, P(Family::del, 2)},
      {"feasible_partitions", "A000296", 0, P(Family::fe, 1)},
      {"fibonacci", "A000045", 0, [](int n) { return fibonacci(n); }},
      {"delannoy_p_1n", "", 0, [](int n) { return delannoy(DelannoyKind::Dp, 1, n); }},
      {"delannoy_p_1n_difference", "",
       0, [](int n) { return delannoy(DelannoyKind::Dp, 1, n) - (n >= 2 ? delannoy(DelannoyKind::Dp, 1, n - 2) : BigInt(0)); }},
      {"alt_catalan_q2", "A000150", 2, P(Family::alt_cat, 1)},
      {"alt_delannoy_q2", "A105635", 1, P(Family::alt_del, 1)},
      {"alt_bell_minus_bell_q2", "A102287", 2,
       [](int n) { return poly(Family::alt_bell, n)(BigInt(1)) - poly(Family::bell, n - 1)(BigInt(1)); }},
      {"bell_minus_alt_bell_q2", "A102286", 2,
       [](int n) { return poly(Family::bell, n)(BigInt(1)) - poly(Family::alt_bell, n)(BigInt(1)); }},
      {"c_invariant_heisenberg_q2", "", 1, P(Family::inv, 1)},
  };
  Records out;
  for (const auto& s : seqs) {
    Record v = Record::array();
    for (int k = 0; k < terms; ++k) v.push_back(big(s.term(s.offset + k)));
    out.push_back({{"name", s.name}, {"oeis", s.oeis.empty() ? "-" : s.oeis}, {"offset", s.offset}, {"values", v}});
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting Heisenberg characters of unitriangular groups", "heis"};
  app.require_subcommand(1);
  app.fallthrough();  // --format and -o also after the subcommand
  std::string format = "text", output;
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("-o,--output", output, "write to a file instead of stdout");

  std::string family, ns, qs = "2", method = "poly", var = "x", theorem, map_kind, input;
  std::optional<std::string> xs;
  long long limit = -1;
  int terms = 7, map_n = 0, map_q = 0;
  bool closed = false;

  auto* count = app.add_subcommand("count", "evaluate a counting polynomial, or count by enumeration or brute force");
  count->add_option("--family", family, "polynomial family or counted object")->required();
  count->add_option("--n", ns, "n range, e.g. 1-5,8")->required();
  count->add_option("--q", qs, "q range");
  count->add_option("--method", method, "poly, closed, enumerate or oracle");

  auto* polyc = app.add_subcommand("poly", "coefficients in x = q - 1");
  polyc->add_option("--family", family)->required();
  polyc->add_option("--n", ns)->required();
  polyc->add_option("--x", xs, "also evaluate at these x");
  polyc->add_option("--var", var, "print coefficients in x (default) or q");
  polyc->add_flag("--closed", closed, "use the binomial-sum form");

  auto* en = app.add_subcommand("enumerate", "list labelled paths or partitions");
  en->add_option("--family", family, "pell, heis, heis_tilde, inv, inv_tilde, all, noncrossing, feasible, heis_support")
      ->required();
  en->add_option("--n", ns)->required();
  en->add_option("--q", qs);
  en->add_option("--limit", limit, "stop after this many items per (n, q)");

  auto* mp = app.add_subcommand("map", "apply one of the bijections");
  mp->add_option("kind", map_kind,
                 "path-to-functional, functional-to-path, pell-to-partition, partition-to-functional, "
                 "functional-to-partition, classify, degree")
      ->required();
  mp->add_option("input", input, "path, partition, or functional as 'n q c12 c13 ...'")->required();
  mp->add_option("--n", map_n);
  mp->add_option("--q", map_q);

  auto* ver = app.add_subcommand("verify", "check a theorem against brute force");
  ver->add_option("theorem", theorem, "theorem id or 'all'")->required();
  ver->add_option("--n", ns)->required();
  ver->add_option("--q", qs);

  auto* sq = app.add_subcommand("sequences", "named integer sequences");
  sq->add_option("--terms", terms)->check(CLI::Range(1, 60));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  int status = kOk;
  try {
    Records rows;
    if (count->parsed()) rows = cmd_count(family, ns, qs, method);
    else if (polyc->parsed()) rows = cmd_poly(family, ns, xs, var, closed);
    else if (en->parsed()) rows = cmd_enumerate(family, ns, qs, limit);
    else if (mp->parsed()) rows = cmd_map(map_kind, input, map_n, map_q);
    else if (ver->parsed()) {
      bool pass = true;
      rows = cmd_verify(theorem, ns, qs, pass);
      if (!pass) status = kFailure;
    } else if (sq->parsed()) rows = cmd_sequences(terms);

    const std::string text = emit(rows, parse_format(format));
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream f(output, std::ios::binary);
      if (!f) throw Error("cannot write " + output);
      f << text;
    }
  } catch (const SpaceTooLarge& e) {
    err << "heis: too large: " << e.what() << '\n';
    return kTooLarge;
  } catch (const NonIntegralDivision& e) {
    err << "heis: error: " << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    // bad names, ranges, fields, or inputs outside a map's domain
    err << "heis: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "heis: error: " << e.what() << '\n';
    return kFailure;
  }
  return status;
}

}  // namespace heis::cli
