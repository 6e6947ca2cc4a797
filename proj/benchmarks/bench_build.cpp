#include <benchmark/benchmark.h>

#include "ccg/gamma.hpp"
#include "ccg/lambda.hpp"
#include "ccg/oracle.hpp"

namespace {

void bm_build_lambda(benchmark::State& state) {
    const auto p = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        auto g = ccg::build_lambda(p);
        benchmark::DoNotOptimize(g.vertex_count());
    }
}
BENCHMARK(bm_build_lambda)->Arg(3)->Arg(5)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

void bm_count_report(benchmark::State& state) {
    const auto g = ccg::build_lambda(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ccg::count_report(g).edges);
}
BENCHMARK(bm_count_report)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);

void bm_gamma_census(benchmark::State& state) {
    const auto g = ccg::blow_up(ccg::build_lambda(static_cast<std::uint32_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(ccg::census(ccg::components(g)).total);
}
BENCHMARK(bm_gamma_census)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

void bm_compression_index(benchmark::State& state) {
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        auto index = ccg::CompressionIndex::build(static_cast<std::uint32_t>(state.range(0)), threads);
        benchmark::DoNotOptimize(index.size());
    }
}
BENCHMARK(bm_compression_index)->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

void bm_brute_lambda(benchmark::State& state) {
    const auto index = ccg::CompressionIndex::build(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ccg::brute_lambda(index).vertex_count());
}
BENCHMARK(bm_brute_lambda)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
