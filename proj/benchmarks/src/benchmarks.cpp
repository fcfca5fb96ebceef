#include <benchmark/benchmark.h>

#include "klab/bounds.hpp"
#include "klab/chromatic.hpp"
#include "klab/fan.hpp"
#include "klab/hardness.hpp"
#include "klab/kneser_graph.hpp"

namespace {

void BM_BuildKneserPairs(benchmark::State& state) {
    const auto base = klab::complete_ksubsets(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        auto ks = klab::build_kneser(base, 2);
        benchmark::DoNotOptimize(ks.kg.edge_count());
    }
}
BENCHMARK(BM_BuildKneserPairs)->Arg(7)->Arg(9)->Arg(11);

void BM_FindThreeColoring(benchmark::State& state) {
    const auto kg = klab::build_kneser(klab::complete_ksubsets(5, 2), 2).kg;
    for (auto _ : state) {
        auto c = klab::find_t_coloring(kg, 3);
        benchmark::DoNotOptimize(c.has_value());
    }
}
BENCHMARK(BM_FindThreeColoring);

void BM_ChromaticNumber(benchmark::State& state) {
    const auto kg =
        klab::build_kneser(klab::complete_ksubsets(static_cast<int>(state.range(0)), 2), 2).kg;
    for (auto _ : state) {
        auto r = klab::chromatic_number(kg);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_ChromaticNumber)->Arg(5)->Arg(6);

void BM_Defect(benchmark::State& state) {
    const auto h = klab::complete_ksubsets(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        auto r = klab::cd(h, 2);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_Defect)->Arg(6)->Arg(8);

void BM_MaxAltIdentity(benchmark::State& state) {
    const auto h = klab::complete_ksubsets(static_cast<int>(state.range(0)), 2);
    const auto pi = klab::identity_permutation(h.vertex_count());
    for (auto _ : state) {
        auto r = klab::max_alt_fixed_perm(h, 2, pi);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_MaxAltIdentity)->Arg(7)->Arg(9);

void BM_FanCheck(benchmark::State& state) {
    for (auto _ : state) {
        auto r = klab::exhaustive_fan_check(2, 2, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r.violations);
    }
}
BENCHMARK(BM_FanCheck)->Arg(2)->Arg(3);

void BM_ReductionSixVertices(benchmark::State& state) {
    const auto g = klab::Hypergraph::from_edge_lists(
        6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 4}});
    for (auto _ : state) {
        auto v = klab::verify_reduction(g);
        benchmark::DoNotOptimize(v.equal);
    }
}
BENCHMARK(BM_ReductionSixVertices);

} // namespace

BENCHMARK_MAIN();
