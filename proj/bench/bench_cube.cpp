#include <benchmark/benchmark.h>

#include "dualz/fuzz.hpp"
#include "dualz/normal_form.hpp"
#include "dualz/verify.hpp"

using namespace dualz;

static void BM_CubeVerify(benchmark::State& state) {
  CubeVerifyConfig c;
  c.count = static_cast<std::size_t>(state.range(0));
  c.execution = state.range(1) ? Execution::parallel : Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(cube_verify(c).passed());
  state.SetLabel(state.range(1) ? "parallel" : "serial");
  state.counters["threads"] = parallel_threads();
}
BENCHMARK(BM_CubeVerify)->Args({50, 0})->Args({50, 1})->Unit(benchmark::kMillisecond);

static void BM_Snf(benchmark::State& state) {
  Rng rng(2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = random_matrix(rng, n, n, 50);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m).D);
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
