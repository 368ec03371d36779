#include <benchmark/benchmark.h>

#include "acqtime/ac_one.hpp"
#include "acqtime/dynamics.hpp"
#include "acqtime/exact.hpp"
#include "acqtime/families.hpp"
#include "acqtime/generators.hpp"
#include "acqtime/hardness.hpp"
#include "acqtime/rng.hpp"
#include "acqtime/routing.hpp"

using namespace acqtime;

namespace {

Graph random_tree(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.push_back({static_cast<Vertex>(rng.next_below(v)), v});
    return Graph::from_edges(n, edges);
}

void BM_SimulatePath(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = generate(PathSpec{n});
    Strategy s = path_strategy(n);
    for (auto _ : state) benchmark::DoNotOptimize(simulate(g, s).all_met);
    state.SetItemsProcessed(state.iterations() * s.length());
}
BENCHMARK(BM_SimulatePath)->Arg(64)->Arg(256)->Arg(1024);

void BM_RouteOnTree(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Tree tree = spanning_tree(random_tree(n, 7), 0);
    std::vector<Vertex> sources, targets;
    for (int i = 0; i < 8; ++i) {
        sources.push_back(i);
        targets.push_back(n - 1 - i);
    }
    RoutingTask task{tree, sources, targets};
    for (auto _ : state) benchmark::DoNotOptimize(route_on_tree(task).length());
}
BENCHMARK(BM_RouteOnTree)->Arg(64)->Arg(512);

void BM_ExactSmall(benchmark::State& state) {
    Graph g = generate(CycleSpec{6});
    for (auto _ : state) benchmark::DoNotOptimize(exact_ac(g).value);
}
BENCHMARK(BM_ExactSmall);

void BM_MixingRound(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    Graph g = ramsey_double(generate(GnpSpec{m, 0.5, 3}),
                            DoublingRule::deterministic)
                  .graph;
    std::vector<Vertex> u_set = high_degree_set(g);
    Rng rng(11);
    for (auto _ : state) benchmark::DoNotOptimize(random_matching(g, u_set, rng).size());
}
BENCHMARK(BM_MixingRound)->Arg(32)->Arg(128);

void BM_DeterministicOneRoundFamily(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    Graph g = ramsey_double(generate(GnpSpec{m, 0.5, 5}),
                            DoublingRule::deterministic)
                  .graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(deterministic_strategy(g).strategy.length());
}
BENCHMARK(BM_DeterministicOneRoundFamily)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
