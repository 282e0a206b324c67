#include <benchmark/benchmark.h>

#include "heis/lattice_path.hpp"
#include "heis/partition.hpp"

using namespace heis;

static void BM_Paths(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::size_t items = 0;
  for (auto _ : st) {
    items = PathStream(PathFamily::heis_tilde, n, 3).count();
    benchmark::DoNotOptimize(items);
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(items) * st.iterations());
}
BENCHMARK(BM_Paths)->Arg(6)->Arg(9);

static void BM_Partitions(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::size_t items = 0;
  for (auto _ : st) {
    items = PartitionStream(n, 3, PartitionFilter::noncrossing).count();
    benchmark::DoNotOptimize(items);
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(items) * st.iterations());
}
BENCHMARK(BM_Partitions)->Arg(6)->Arg(8);
