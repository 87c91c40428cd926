#include <benchmark/benchmark.h>

#include "qstirl/det_tuples.hpp"
#include "qstirl/poset.hpp"
#include "qstirl/qanalog.hpp"
#include "qstirl/registry.hpp"
#include "qstirl/rgword.hpp"
#include "qstirl/stirling.hpp"

using namespace qstirl;

static void BM_StirlingRecurrence(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(stirling_rec(n, n / 2));
}
BENCHMARK(BM_StirlingRecurrence)->Arg(10)->Arg(40)->Arg(120);

static void BM_StirlingEnumeration(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(stirling_enum(n, n / 2));
  state.counters["words"] = stirling_rec(n, n / 2).eval(1).get_d();
}
BENCHMARK(BM_StirlingEnumeration)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_StirlingHomogeneous(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(stirling_h(n, n / 2));
}
BENCHMARK(BM_StirlingHomogeneous)->Arg(6)->Arg(10)->Arg(14);

static void BM_RGSequence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_rg(n, static_cast<int>(n / 2), [&](const RGWord&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_RGSequence)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_QBinomial(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(q_binomial(n, n / 2));
}
BENCHMARK(BM_QBinomial)->Arg(12)->Arg(48);

static void BM_HankelCofactor(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hankel_det(state.range(0), 3));
}
BENCHMARK(BM_HankelCofactor)->DenseRange(1, 5);

static void BM_DetTupleSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(det_sweep(2, state.range(0)));
}
BENCHMARK(BM_DetTupleSweep)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_Decompose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(n, static_cast<Letter>(n)));
}
BENCHMARK(BM_Decompose)->DenseRange(3, 6);

static void BM_VerifyDefaultGrid(benchmark::State& state) {
  RunOptions opts;
  opts.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    for (const auto& info : identity_registry()) benchmark::DoNotOptimize(run_grid(info.name, info.default_grid(8), opts));
  }
}
BENCHMARK(BM_VerifyDefaultGrid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
