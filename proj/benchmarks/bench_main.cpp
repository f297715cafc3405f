// Microbenchmarks for the hot paths: enumeration, the exact duality solve,
// type computation and the unbreakability sweep. Instances are sized so a
// single iteration stays in the microsecond-to-millisecond range.

#include <benchmark/benchmark.h>

#include "glpath/connectivity.hpp"
#include "glpath/construct.hpp"
#include "glpath/duality.hpp"
#include "glpath/gadget.hpp"
#include "glpath/group.hpp"
#include "glpath/types.hpp"

using namespace glpath;

namespace {

GroupPtr z2() { return FiniteGroup::cyclic(2); }

STGraph random_graph(int n, uint64_t seed) {
    RandomSpec spec;
    spec.group = z2();
    spec.n_vertices = n;
    spec.seed = seed;
    return random_instance(spec);
}

void BM_EnumeratePaths(benchmark::State& state) {
    STGraph g = build_figure1((int)state.range(0));
    for (auto _ : state) {
        auto paths = enumerate_nonnull_paths(g, g.S(), g.T(), 10000000);
        benchmark::DoNotOptimize(paths.size());
    }
}
BENCHMARK(BM_EnumeratePaths)->Arg(1);

void BM_Solve(benchmark::State& state) {
    STGraph g = random_graph((int)state.range(0), 7);
    for (auto _ : state) {
        SolveResult r = solve(g);
        benchmark::DoNotOptimize(r.packing.value + r.hitting.value);
    }
}
// the exact solve is exponential; n = 10 at this density already takes
// tens of seconds, so the sweep stops at 9
BENCHMARK(BM_Solve)->Arg(7)->Arg(8)->Arg(9);

void BM_Linkage(benchmark::State& state) {
    STGraph g = random_graph((int)state.range(0), 11);
    for (auto _ : state) {
        Linkage l = max_disjoint_linkage(g, g.S(), g.T());
        benchmark::DoNotOptimize(l.size());
    }
}
BENCHMARK(BM_Linkage)->Arg(16)->Arg(32);

void BM_Unbreakability(benchmark::State& state) {
    STGraph g = random_graph((int)state.range(0), 13);
    for (auto _ : state) {
        UnbreakabilityResult r = unbreakability(g, 3, 3);
        benchmark::DoNotOptimize(r.unbreakable);
    }
}
BENCHMARK(BM_Unbreakability)->Arg(10)->Arg(12);

void BM_ComputeType(benchmark::State& state) {
    STGraph g = random_graph((int)state.range(0), 5);
    std::vector<int> iface{0};
    ProblemUniverse U = ProblemUniverse::build(z2(), 1);
    for (auto _ : state) {
        TypeFingerprint fp = compute_type(g, iface, U);
        benchmark::DoNotOptimize(fp.hash());
    }
}
BENCHMARK(BM_ComputeType)->Arg(6)->Arg(8);

void BM_CatalogBuild(benchmark::State& state) {
    for (auto _ : state) {
        GadgetCatalog c = GadgetCatalog::build(z2(), 1, (int)state.range(0));
        benchmark::DoNotOptimize(c.entries().size());
    }
}
BENCHMARK(BM_CatalogBuild)->Arg(2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
