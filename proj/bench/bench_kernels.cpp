#include <benchmark/benchmark.h>

#include "oodd/approx.hpp"
#include "oodd/maps.hpp"

namespace {

const oodd::QuadIrr kRoot2(-1, 1, 2, 1);

void BM_best_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(oodd::best_one_rationals_serial(kRoot2, st.range(0)));
}

void BM_best_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(oodd::best_one_rationals(kRoot2, st.range(0)));
}

void BM_measure_serial(benchmark::State& st) {
  oodd::Interval iv{oodd::Rational(1, 3), oodd::Rational(2, 3)};
  for (auto _ : st) benchmark::DoNotOptimize(oodd::measure_check_serial(iv, st.range(0)));
}

void BM_measure_parallel(benchmark::State& st) {
  oodd::Interval iv{oodd::Rational(1, 3), oodd::Rational(2, 3)};
  for (auto _ : st) benchmark::DoNotOptimize(oodd::measure_check(iv, st.range(0)));
}

}  // namespace

BENCHMARK(BM_best_serial)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_best_parallel)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_measure_serial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_measure_parallel)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
