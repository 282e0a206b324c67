#include "heis/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "heis/error.hpp"
#include "heis/limits.hpp"

namespace heis {

LabeledSetPartition::LabeledSetPartition(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw DomainError("partition size must be >= 0");
  std::sort(arcs_.begin(), arcs_.end());
  std::vector<bool> src(n + 1, false), dst(n + 1, false);
  for (const auto& a : arcs_) {
    if (a.i < 1 || a.j > n || a.i >= a.j)
      throw NotAPartition("arc " + std::to_string(a.i) + "-" + std::to_string(a.j) + " is not an arc of [" + std::to_string(n) + "]");
    if (a.label == 0) throw NotAPartition("arc labels must be nonzero");
    if (src[a.i]) throw NotAPartition(std::to_string(a.i) + " starts two arcs");
    if (dst[a.j]) throw NotAPartition(std::to_string(a.j) + " ends two arcs");
    src[a.i] = dst[a.j] = true;
  }
}

std::vector<std::pair<int, int>> arcs_of(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> seen(n + 1, 0);
  std::vector<std::pair<int, int>> out;
  for (auto b : blocks) {
    if (b.empty()) throw NotAPartition("empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n) throw NotAPartition(std::to_string(x) + " is outside [" + std::to_string(n) + "]");
      if (seen[x]++) throw NotAPartition(std::to_string(x) + " appears twice");
    }
    for (std::size_t k = 0; k + 1 < b.size(); ++k) out.emplace_back(b[k], b[k + 1]);
  }
  for (int x = 1; x <= n; ++x)
    if (!seen[x]) throw NotAPartition(std::to_string(x) + " is missing");
  std::sort(out.begin(), out.end());
  return out;
}

LabeledSetPartition LabeledSetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks,
                                                     const std::vector<Code>& labels) {
  const auto pairs = arcs_of(n, blocks);
  if (!labels.empty() && labels.size() != pairs.size())
    throw DomainError("need one label per arc");
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    arcs.push_back({pairs[k].first, pairs[k].second, labels.empty() ? Code{1} : labels[k]});
  return LabeledSetPartition(n, std::move(arcs));
}

std::vector<std::vector<int>> LabeledSetPartition::blocks() const {
  std::vector<int> next(n_ + 1, 0);
  std::vector<bool> has_pred(n_ + 1, false);
  for (const auto& a : arcs_) {
    next[a.i] = a.j;
    has_pred[a.j] = true;
  }
  std::vector<std::vector<int>> out;
  for (int x = 1; x <= n_; ++x) {
    if (has_pred[x]) continue;
    std::vector<int> b;
    for (int y = x; y; y = next[y]) b.push_back(y);
    out.push_back(std::move(b));
  }
  return out;
}

bool is_noncrossing(const LabeledSetPartition& p) {
  const auto& a = p.arcs();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a[x].i < a[y].i && a[y].i < a[x].j && a[x].j < a[y].j) return false;
  return true;
}

bool is_feasible(const LabeledSetPartition& p) {
  std::vector<bool> touched(p.size() + 1, false);
  for (const auto& a : p.arcs()) touched[a.i] = touched[a.j] = true;
  for (int x = 1; x <= p.size(); ++x)
    if (!touched[x]) return false;
  return true;
}

LabeledSetPartition shift(const LabeledSetPartition& p) {
  auto arcs = p.arcs();
  for (auto& a : arcs) ++a.j;
  return LabeledSetPartition(p.size() + 1, std::move(arcs));
}

Functional partition_to_functional(const LabeledSetPartition& p, FieldPtr f) {
  if (p.size() < 1) throw DomainError("partition of the empty set has no functional");
  StrictUpperMatrix m(std::move(f), p.size());
  for (const auto& a : p.arcs()) m.set(a.i, a.j, a.label);
  return Functional(std::move(m));
}

LabeledSetPartition functional_to_partition(const Functional& lambda) {
  const int n = lambda.dim();
  std::vector<Arc> arcs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (Code c = lambda.at(i, j)) arcs.push_back({i, j, c});
  return LabeledSetPartition(n, std::move(arcs));
}

PartitionFilter parse_partition_filter(std::string_view name) {
  if (name == "all") return PartitionFilter::all;
  if (name == "noncrossing") return PartitionFilter::noncrossing;
  if (name == "feasible") return PartitionFilter::feasible;
  if (name == "heis_support") return PartitionFilter::heis_support;
  throw UnknownFamily("unknown partition filter '" + std::string(name) + "'");
}

std::string to_string(PartitionFilter f) {
  switch (f) {
    case PartitionFilter::all: return "all";
    case PartitionFilter::noncrossing: return "noncrossing";
    case PartitionFilter::feasible: return "feasible";
    case PartitionFilter::heis_support: return "heis_support";
  }
  return "?";
}

PartitionStream::PartitionStream(int n, int q, PartitionFilter filter)
    : n_(n), q_(q), filter_(filter), target_used_(n + 1, false) {
  if (n < 1) throw DomainError("n must be >= 1");
  prime_power(q);
}

bool PartitionStream::admissible(int i, int j) const {
  if (target_used_[j]) return false;
  if (filter_ == PartitionFilter::heis_support && j - i > 2) return false;
  if (filter_ == PartitionFilter::noncrossing || filter_ == PartitionFilter::heis_support)
    for (const auto& a : arcs_)
      if (a.i < i && i < a.j && a.j < j) return false;
  return true;
}

bool PartitionStream::accept() const {
  if (filter_ != PartitionFilter::feasible) return true;
  std::vector<bool> touched(n_ + 1, false);
  for (const auto& a : arcs_) touched[a.i] = touched[a.j] = true;
  for (int x = 1; x <= n_; ++x)
    if (!touched[x]) return false;
  return true;
}

std::optional<LabeledSetPartition> PartitionStream::next() {
  if (!started_) {
    started_ = true;
    stack_.push_back({1, 2, 1});
    if (accept()) return LabeledSetPartition(n_, arcs_);
  }
  while (!stack_.empty()) {
    Cursor& c = stack_.back();
    // move c to the next admissible child (i, j, t)
    bool found = false;
    while (c.i < n_) {
      if (c.j > n_) {
        ++c.i;
        c.j = c.i + 1;
        c.t = 1;
        continue;
      }
      if (c.t >= q_ || !admissible(c.i, c.j)) {
        ++c.j;
        c.t = 1;
        continue;
      }
      found = true;
      break;
    }
    if (!found) {
      stack_.pop_back();
      if (!arcs_.empty() && stack_.size() == arcs_.size()) {
        target_used_[arcs_.back().j] = false;
        arcs_.pop_back();
      }
      continue;
    }
    const Arc arc{c.i, c.j, static_cast<Code>(c.t)};
    ++c.t;
    arcs_.push_back(arc);
    target_used_[arc.j] = true;
    stack_.push_back({arc.i + 1, arc.i + 2, 1});
    if (accept()) return LabeledSetPartition(n_, arcs_);
  }
  return std::nullopt;
}

std::size_t PartitionStream::count() {
  std::size_t k = 0;
  while (next()) ++k;
  return k;
}

std::vector<LabeledSetPartition> PartitionStream::collect() {
  std::vector<LabeledSetPartition> out;
  while (auto p = next()) out.push_back(std::move(*p));
  return out;
}

PartitionStream enumerate_partitions(int n, int q, PartitionFilter filter) {
  check_enumeration_size("enumerate_partitions", n, kMaxPartitionN);
  return PartitionStream(n, q, filter);
}

std::string serialize(const LabeledSetPartition& p) {
  if (p.arcs().empty()) return "{}";
  std::ostringstream os;
  bool first = true;
  for (const auto& a : p.arcs()) {
    if (!first) os << ' ';
    first = false;
    os << a.i << '-' << a.j << ':' << static_cast<int>(a.label);
  }
  return os.str();
}

LabeledSetPartition parse_partition(std::string_view text, int n) {
  std::istringstream is{std::string(text)};
  std::string tok;
  std::vector<Arc> arcs;
  while (is >> tok) {
    if (tok == "{}") continue;
    int i = 0, j = 0, t = 0;
    char dash = 0, colon = 0;
    std::istringstream ts(tok);
    if (!(ts >> i >> dash >> j >> colon >> t) || dash != '-' || colon != ':' || t < 1 || t > 255)
      throw ParseError("bad arc '" + tok + "', expected i-j:label");
    arcs.push_back({i, j, static_cast<Code>(t)});
  }
  return LabeledSetPartition(n, std::move(arcs));
}

}  // namespace heis
