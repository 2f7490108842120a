#include <benchmark/benchmark.h>

#include "lmt/gauges.hpp"
#include "lmt/generate.hpp"
#include "lmt/linalg.hpp"
#include "lmt/transforms.hpp"

namespace {

lmt::ComplexMatrix dense(std::size_t n, std::uint64_t seed) {
    lmt::Rng rng(seed);
    lmt::ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.cgaussian();
    return g;
}

void BM_hermitian_eig(benchmark::State& state) {
    const auto a = lmt::hermitian_part(dense(state.range(0), 1));
    for (auto _ : state) benchmark::DoNotOptimize(lmt::hermitian_eig(a));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_hermitian_eig)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_polar_decompose(benchmark::State& state) {
    const auto t = dense(state.range(0), 2);
    for (auto _ : state) benchmark::DoNotOptimize(lmt::polar_decompose(t));
}
BENCHMARK(BM_polar_decompose)->RangeMultiplier(2)->Range(4, 32);

void BM_lambda_mean(benchmark::State& state) {
    const auto t = dense(state.range(0), 3);
    for (auto _ : state) benchmark::DoNotOptimize(lmt::lambda_mean(t, 0.3));
}
BENCHMARK(BM_lambda_mean)->RangeMultiplier(2)->Range(4, 32);

void BM_numerical_radius(benchmark::State& state) {
    const auto t = dense(state.range(0), 4);
    const double tol = 1e-6 * lmt::operator_norm(t);
    for (auto _ : state) benchmark::DoNotOptimize(lmt::numerical_radius(t, tol, 1 << 16));
}
BENCHMARK(BM_numerical_radius)->RangeMultiplier(2)->Range(2, 16);

void BM_eigenvalues_qr(benchmark::State& state) {
    const auto t = dense(state.range(0), 5);
    for (auto _ : state) benchmark::DoNotOptimize(lmt::eigenvalues(t));
}
BENCHMARK(BM_eigenvalues_qr)->RangeMultiplier(2)->Range(4, 64);

void BM_radius_integral(benchmark::State& state) {
    const auto t = dense(state.range(0), 6);
    const double tol = 1e-3 * lmt::operator_norm(t);
    for (auto _ : state) benchmark::DoNotOptimize(lmt::radius_integral(t, tol));
}
BENCHMARK(BM_radius_integral)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
