#include <benchmark/benchmark.h>

#include "qmzv/brackets.hpp"
#include "qmzv/formal_space.hpp"
#include "qmzv/realizations.hpp"

using namespace qmzv;

static void BM_DepthTwoBracket(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_bracket(bi(2, 3, 0, 0), N));
}
BENCHMARK(BM_DepthTwoBracket)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_QSeriesProduct(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const QSeries a = eval_bracket(bi(2, 0), N);
  const QSeries b = eval_bracket(bi(3, 1), N);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_QSeriesProduct)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

static void BM_RelationSet(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(relation_set(K).rank());
}
BENCHMARK(BM_RelationSet)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_ESeries(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(e_series(D, 30).e2.terms().size());
}
BENCHMARK(BM_ESeries)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
