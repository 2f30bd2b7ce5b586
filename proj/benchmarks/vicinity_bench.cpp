#include <benchmark/benchmark.h>

#include "lcalab/generator.hpp"
#include "lcalab/ranking.hpp"
#include "lcalab/rng.hpp"
#include "lcalab/vicinity.hpp"

using namespace lcalab;

namespace {

const Graph& bench_graph() {
    static Graph g = [] {
        GeneratorSpec spec;
        spec.model = GraphModel::gnp;
        spec.n = 1 << 14;
        spec.d = 3.0;
        spec.rng_seed = 0xBE12;
        return generate(spec);
    }();
    return g;
}

}  // namespace

static void BM_RelevantVicinity(benchmark::State& state) {
    const Graph& g = bench_graph();
    auto rf = RankingFunction::sample(g.n(), default_L(g.n(), 3.0),
                                      default_k(g.n(), 3.0), 0xBE13);
    CachedRankingOrder ord(rf);
    Engine eng = make_engine(0xBE14);
    std::uint64_t members = 0;
    for (auto _ : state) {
        GraphOracle oracle(g);
        auto center = static_cast<VertexId>(uniform_below(eng, g.n()));
        Vicinity vic = relevant_vicinity(oracle, ord, center);
        members += vic.t_v;
    }
    state.counters["mean_t_v"] =
        benchmark::Counter(static_cast<double>(members),
                           benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_RelevantVicinity);

static void BM_ContainingVicinity(benchmark::State& state) {
    const Graph& g = bench_graph();
    auto rf = RankingFunction::sample(g.n(), default_L(g.n(), 3.0),
                                      default_k(g.n(), 3.0), 0xBE13);
    CachedRankingOrder ord(rf);
    Engine eng = make_engine(0xBE15);
    for (auto _ : state) {
        GraphOracle oracle(g);
        auto center = static_cast<VertexId>(uniform_below(eng, g.n()));
        benchmark::DoNotOptimize(containing_vicinity(oracle, ord, center));
    }
}
BENCHMARK(BM_ContainingVicinity);
