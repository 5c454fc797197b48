#include <benchmark/benchmark.h>

#include "qpos/generating.hpp"
#include "qpos/verify.hpp"

using namespace qpos;

namespace {

void BM_f_def(benchmark::State& state) {
    const std::size_t N = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        TruncSeries f = f_def(8, 1, N);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_f_def)->Arg(500)->Arg(2000);

void BM_omega(benchmark::State& state) {
    const std::size_t N = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        TruncSeries w = omega(N);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_omega)->Arg(2000);

void BM_verify_stream(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        PrefixReport r = verify_prefix_stream(k);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_verify_stream)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_verify_materialized(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        PrefixReport r = verify_prefix_materialized(k);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_verify_materialized)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
