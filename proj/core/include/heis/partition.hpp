#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heis/linalg.hpp"

namespace heis {

// Arc i -> j (i < j) between consecutive elements of a block, labelled by a
// nonzero field code.
struct Arc {
  int i = 0, j = 0;
  Code label = 1;
  auto operator<=>(const Arc&) const = default;
};

// F_q-labelled set partition of [n], stored as its arcs sorted by source.
class LabeledSetPartition {
 public:
  explicit LabeledSetPartition(int n, std::vector<Arc> arcs = {});
  // blocks must partition {1..n}; labels go to the arcs in arcs_of order (default all 1)
  static LabeledSetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks,
                                         const std::vector<Code>& labels = {});

  int size() const noexcept { return n_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  // blocks sorted by minimum, each sorted ascending
  std::vector<std::vector<int>> blocks() const;

  auto operator<=>(const LabeledSetPartition&) const = default;

 private:
  int n_;
  std::vector<Arc> arcs_;
};

// Unlabelled arcs (consecutive elements of each block) sorted lexicographically.
std::vector<std::pair<int, int>> arcs_of(int n, const std::vector<std::vector<int>>& blocks);

bool is_noncrossing(const LabeledSetPartition& p);
// every block has at least two elements
bool is_feasible(const LabeledSetPartition& p);
// arcs (i, j) -> (i, j + 1); a partition of [n + 1]
LabeledSetPartition shift(const LabeledSetPartition& p);

// sum of label * e*_{ij} over the arcs
Functional partition_to_functional(const LabeledSetPartition& p, FieldPtr f);
// inverse on functionals with at most one nonzero entry per row and per column
LabeledSetPartition functional_to_partition(const Functional& lambda);

// heis_support: noncrossing, arcs (i, i+1) and (i, i+2) only
enum class PartitionFilter { all, noncrossing, feasible, heis_support };
PartitionFilter parse_partition_filter(std::string_view name);
std::string to_string(PartitionFilter f);

// Lazy enumeration of Pi(n, F_q) restricted by a filter, in lexicographic
// order of the arc lists (arcs compared as (i, j, label)).
class PartitionStream {
 public:
  PartitionStream(int n, int q, PartitionFilter filter);
  std::optional<LabeledSetPartition> next();
  std::size_t count();  // drains the stream
  std::vector<LabeledSetPartition> collect();

 private:
  struct Cursor {
    int i, j, t;
  };
  bool admissible(int i, int j) const;
  bool accept() const;

  int n_, q_;
  PartitionFilter filter_;
  bool started_ = false;
  std::vector<Arc> arcs_;
  std::vector<bool> target_used_;
  std::vector<Cursor> stack_;
};

// Guarded by the advisory bound n <= 10.
PartitionStream enumerate_partitions(int n, int q, PartitionFilter filter);

// "1-3:1 2-4:2"; the empty partition is "{}"
std::string serialize(const LabeledSetPartition& p);
LabeledSetPartition parse_partition(std::string_view text, int n);

}  // namespace heis
