#include <benchmark/benchmark.h>

#include "heis/census.hpp"
#include "heis/chains.hpp"
#include "heis/truncated_group.hpp"

using namespace heis;
using namespace heis::oracle;

static void BM_TwoSidedCensus(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), q = static_cast<int>(st.range(1));
  for (auto _ : st) {
    SpaceCensus c(Field::make(q), n, DualSpace::Kind::full, Mode::two_sided);
    benchmark::DoNotOptimize(c.census().orbits().size());
  }
}
BENCHMARK(BM_TwoSidedCensus)->Args({4, 3})->Args({5, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);

static void BM_XiCensus(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), q = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(count_heisenberg_characters(n, q, HeisMethod::xi_census).count);
}
BENCHMARK(BM_XiCensus)->Args({5, 2})->Args({5, 3})->Args({6, 2})->Unit(benchmark::kMillisecond);

static void BM_TruncatedClasses(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), q = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(conjugacy_classes({GroupSpec::Kind::truncated, n, q}).classes());
}
BENCHMARK(BM_TruncatedClasses)->Args({5, 3})->Args({7, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

static void BM_LsChain(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto f = Field::make(3);
  StrictUpperMatrix m(f, n);
  for (int i = 1; i + 2 <= n; ++i) m.set(i, i + 2, 1);
  const Functional l(m);
  for (auto _ : st) benchmark::DoNotOptimize(ls_chain(l).l_chain.size());
}
BENCHMARK(BM_LsChain)->Arg(5)->Arg(8)->Arg(12);
