#include <benchmark/benchmark.h>

#include "powfactor/engine.hpp"
#include "powfactor/generators.hpp"
#include "powfactor/tree_partition.hpp"
#include "powfactor/verify.hpp"

namespace {

using namespace powfactor;

void BM_EngineRandom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto g = random_2connected(n, 12345);
    EngineOptions opts;
    opts.verify = false;
    for (auto _ : state) benchmark::DoNotOptimize(partition_2connected(g, opts));
}
BENCHMARK(BM_EngineRandom)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

// invariant checks dominate on long sparse inputs
void BM_EngineTheta(benchmark::State& state) {
    const auto g = theta(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(partition_2connected(g));
}
BENCHMARK(BM_EngineTheta)->Arg(4)->Arg(8)->Arg(12);

void BM_FactorSubdividedK4Cube(benchmark::State& state) {
    const auto host = graph_power(subdivided_k4(4), 3);
    for (auto _ : state) benchmark::DoNotOptimize(has_kr_factor(host, 4));
}
BENCHMARK(BM_FactorSubdividedK4Cube);

void BM_BruteForce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto g = random_2connected(n, 99);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_partition(g, std::vector<int>(n / 4, 4)));
}
BENCHMARK(BM_BruteForce)->Arg(8)->Arg(12)->Arg(16);

void BM_Enumerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_2connected(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_TreePartition(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto t = random_tree(n, 7);
    const std::vector<int> sizes(n / 4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(partition_tree(t, sizes));
}
BENCHMARK(BM_TreePartition)->Arg(64)->Arg(1024)->Arg(16384);

}  // namespace

BENCHMARK_MAIN();
