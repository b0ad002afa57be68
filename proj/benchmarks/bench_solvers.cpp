#include <benchmark/benchmark.h>

#include "btls/generators.hpp"
#include "btls/oracle.hpp"
#include "btls/sbtls.hpp"
#include "btls/smw.hpp"

using namespace btls;

namespace {

FloatSystem scaling_f64(int n) { return to_float(generate({Family::Example33, n})); }

void BM_sbtls_f64(benchmark::State& state) {
    const FloatSystem sys = scaling_f64(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_sbtls_f64(sys));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_sbtls_f64)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oN);

void BM_smw_f64_sequential(benchmark::State& state) {
    const FloatSystem sys = scaling_f64(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_smw_f64(sys, SmwExecution::Sequential));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_smw_f64_sequential)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oN);

void BM_smw_f64_concurrent(benchmark::State& state) {
    const FloatSystem sys = scaling_f64(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_smw_f64(sys, SmwExecution::Concurrent));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_smw_f64_concurrent)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oN);

void BM_gauss_f64(benchmark::State& state) {
    const FloatSystem sys = scaling_f64(static_cast<int>(state.range(0)));
    const auto dense = DenseMatrix<double>::from_rows(dense_matrix(sys));
    for (auto _ : state) benchmark::DoNotOptimize(gauss_solve(dense, sys.y));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_gauss_f64)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNCubed);

void BM_sbtls_exact(benchmark::State& state) {
    const ExactSystem sys = generate({Family::Random, static_cast<int>(state.range(0)), 1});
    for (auto _ : state) benchmark::DoNotOptimize(solve_sbtls(sys));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_sbtls_exact)->RangeMultiplier(2)->Range(8, 128);

void BM_smw_exact(benchmark::State& state) {
    const ExactSystem sys = generate({Family::Random, static_cast<int>(state.range(0)), 1});
    for (auto _ : state) benchmark::DoNotOptimize(solve_smw(sys));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_smw_exact)->RangeMultiplier(2)->Range(8, 128);

void BM_bareiss_exact(benchmark::State& state) {
    const ExactSystem sys = generate({Family::Random, static_cast<int>(state.range(0)), 1});
    const auto dense = DenseMatrix<Rational>::from_rows(dense_matrix(sys));
    for (auto _ : state) benchmark::DoNotOptimize(bareiss_solve(dense, sys.y));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_bareiss_exact)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
