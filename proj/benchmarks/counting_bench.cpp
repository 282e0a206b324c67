#include <benchmark/benchmark.h>

#include "heis/counting.hpp"

using namespace heis;

static void BM_Poly(benchmark::State& st) {
  const auto f = static_cast<Family>(st.range(0));
  const int n = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(poly(f, n).degree());
  st.SetLabel(to_string(f));
}
BENCHMARK(BM_Poly)
    ->Args({static_cast<int>(Family::he), 40})
    ->Args({static_cast<int>(Family::bell), 40})
    ->Args({static_cast<int>(Family::alt_cat), 40})
    ->Args({static_cast<int>(Family::alt_he), 40});

static void BM_CInvariantHeis(benchmark::State& st) {
  const auto m = static_cast<CInvMethod>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(c_invariant_heis_count(30, 5, m));
}
BENCHMARK(BM_CInvariantHeis)->Arg(static_cast<int>(CInvMethod::compositions))->Arg(static_cast<int>(CInvMethod::recurrence));
