#include <benchmark/benchmark.h>

#include "raagv/classifier.hpp"
#include "raagv/harness.hpp"
#include "raagv/partitioner.hpp"

using namespace raagv;

static void BM_CrossCheckSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cross_check_serial(n));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * graph_count(n)));
}
BENCHMARK(BM_CrossCheckSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_CrossCheckParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cross_check(n));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * graph_count(n)));
}
BENCHMARK(BM_CrossCheckParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

// The three deciders on one large member of the class.
static void BM_TripleScan(benchmark::State& state) {
    const Graph g = random_nb_graph(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(find_forbidden_triple(g));
}
BENCHMARK(BM_TripleScan)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMicrosecond);

static void BM_Recognizer(benchmark::State& state) {
    const Graph g = random_nb_graph(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(recognize_multipartite(g));
}
BENCHMARK(BM_Recognizer)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMicrosecond);

static void BM_Greedy(benchmark::State& state) {
    const Graph g = random_nb_graph(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(greedy_partition(g));
}
BENCHMARK(BM_Greedy)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
