// Serial reference enumeration vs. the OpenMP partitioned kernel.
#include <benchmark/benchmark.h>

#include "parking/oracle.hpp"

namespace {

const parking::SizeVector kSizes({2, 1, 3, 1, 2});

void BM_VerifySerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(parking::verify_serial(kSizes, parking::Flavor::linear));
    }
}
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);

void BM_VerifyParallel(benchmark::State& state) {
    const parking::OracleOptions options{parking::default_budget,
                                         static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(parking::verify(kSizes, parking::Flavor::linear, options));
    }
}
BENCHMARK(BM_VerifyParallel)->Arg(1)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(parking::verify_sweep(4, 9, parking::Flavor::linear));
    }
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
