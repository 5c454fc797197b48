#include <benchmark/benchmark.h>

#include "qpos/qseries.hpp"
#include "qpos/series.hpp"

using namespace qpos;

namespace {

// Deterministic dense operand with small mixed-sign coefficients.
TruncSeries dense_operand(std::size_t order, long salt) {
    TruncSeries s(order);
    for (std::size_t j = 0; j <= order; ++j)
        s[j] = static_cast<long>((j * 7 + salt) % 9) - 4;
    return s;
}

void BM_mul(benchmark::State& state) {
    const std::size_t N = static_cast<std::size_t>(state.range(0));
    const TruncSeries a = dense_operand(N, 1);
    const TruncSeries b = dense_operand(N, 2);
    for (auto _ : state) {
        TruncSeries r = mul(a, b);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_mul)->Arg(256)->Arg(1024);

void BM_invert(benchmark::State& state) {
    const std::size_t N = static_cast<std::size_t>(state.range(0));
    TruncSeries a = dense_operand(N, 3);
    a[0] = 1; // unit constant term
    for (auto _ : state) {
        TruncSeries r = invert(a);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_invert)->Arg(256)->Arg(1024);

void BM_poch_infinite(benchmark::State& state) {
    const std::size_t N = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        TruncSeries r = poch({q_pow(1), 2, {}}, N);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_poch_infinite)->Arg(1024)->Arg(4096);

void BM_gauss_poly(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        IntPolynomial g = gauss(n, n / 2, 2);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_gauss_poly)->Arg(16)->Arg(32);

} // namespace
