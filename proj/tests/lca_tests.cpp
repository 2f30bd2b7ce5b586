#include <doctest.h>

#include <cstdint>
#include <vector>

#include "lcalab/errors.hpp"
#include "lcalab/generator.hpp"
#include "lcalab/lca.hpp"
#include "lcalab/online.hpp"
#include "lcalab/primes.hpp"
#include "lcalab/ranking.hpp"
#include "lcalab/rng.hpp"

using namespace lcalab;

namespace {

Graph random_graph(VertexId n, double d, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.model = GraphModel::gnp;
    spec.n = n;
    spec.d = d;
    spec.rng_seed = seed;
    return generate(spec);
}

}  // namespace

TEST_CASE("per-inquiry answers combine to the one global greedy solution") {
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(60, 3.0, derive_seed(0x71, trial));
        auto rf = RankingFunction::sample(g.n(), 8, 12, derive_seed(0x72, trial));
        CachedRankingOrder ord(rf);

        for (Problem p : {Problem::mis, Problem::coloring}) {
            auto expect = global_online_run(g, rf, p);
            for (VertexId v = 0; v < g.n(); ++v) {
                GraphOracle oracle(g);
                auto res = lca_answer_method1(oracle, ord, p, v);
                CHECK(res.vertex == v);
                CHECK(res.output == expect[v]);
                CHECK(res.queries == res.t_v);
                CHECK(res.peak_words > 0);
            }
        }

        if (g.m() == 0) continue;
        EdgeIndex idx(g);
        auto rfe = RankingFunction::sample(static_cast<VertexId>(idx.m()), 8, 12,
                                           derive_seed(0x73, trial));
        CachedRankingOrder orde(rfe);
        auto expect = global_online_run_edges(g, idx, rfe);
        for (std::uint32_t e = 0; e < idx.m(); ++e) {
            LineGraphOracle oracle(g, idx);
            auto res = lca_answer_method1(oracle, orde, Problem::matching, e);
            CHECK(res.output == expect[e]);
        }
    }
}

TEST_CASE("the short-label construction answers exactly like the full one") {
    int checked = 0;
    for (int trial = 0; checked < 500; ++trial) {
        Graph g = random_graph(20 + (trial % 80), 3.0, derive_seed(0x81, trial));
        auto rf =
            RankingFunction::sample(g.n(), default_L(g.n(), 3.0),
                                    default_k(g.n(), 3.0), derive_seed(0x82, trial));
        CachedRankingOrder ord(rf);
        Engine eng = make_engine(derive_seed(0x83, trial));
        VertexId center = static_cast<VertexId>(uniform_below(eng, g.n()));
        Problem p = static_cast<Problem>(trial % 3);
        if (p == Problem::matching) p = Problem::mis;  // edge ids handled below

        GraphOracle o1(g), o2(g);
        auto r1 = lca_answer_method1(o1, ord, p, center);
        auto r2 = lca_answer_method2(o2, ord, p, center);
        CHECK(r1.vertex == r2.vertex);
        CHECK(r1.output == r2.output);
        CHECK(r1.t_v == r2.t_v);
        CHECK(r1.t_e == r2.t_e);
        CHECK(r1.queries == r2.queries);
        CHECK(r2.queries == r2.t_v);
        ++checked;
    }
}

TEST_CASE("short labels agree on line-graph inquiries too") {
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(40, 3.0, derive_seed(0x91, trial));
        if (g.m() == 0) continue;
        EdgeIndex idx(g);
        auto m = static_cast<VertexId>(idx.m());
        auto rf = RankingFunction::sample(m, 8, 10, derive_seed(0x92, trial));
        CachedRankingOrder ord(rf);
        Engine eng = make_engine(derive_seed(0x93, trial));
        auto center = static_cast<std::uint32_t>(uniform_below(eng, m));

        LineGraphOracle o1(g, idx), o2(g, idx);
        auto r1 = lca_answer_method1(o1, ord, Problem::matching, center);
        auto r2 = lca_answer_method2(o2, ord, Problem::matching, center);
        CHECK(r1.output == r2.output);
        CHECK(r1.t_v == r2.t_v);
        CHECK(r1.t_e == r2.t_e);
        CHECK(r1.queries == r2.queries);
    }
}

TEST_CASE("hand-checked id-order triangle") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    auto rf = RankingFunction::with_coefficients(3, 1, {0}, 3);
    CachedRankingOrder ord(rf);
    std::vector<Value> mis_expect{1, 0, 0};
    std::vector<Value> col_expect{1, 2, 3};
    for (VertexId v = 0; v < 3; ++v) {
        GraphOracle o1(k3), o2(k3);
        CHECK(lca_answer_method1(o1, ord, Problem::mis, v).output == mis_expect[v]);
        CHECK(lca_answer_method2(o2, ord, Problem::coloring, v).output ==
              col_expect[v]);
    }
    // vertex 0 arrives first: its vicinity is itself alone
    GraphOracle o(k3);
    auto res = lca_answer_method1(o, ord, Problem::mis, 0);
    CHECK(res.t_v == 1);
    CHECK(res.t_e == 2);
    CHECK(res.queries == 1);
}

TEST_CASE("single-vertex graph answers without exploring") {
    Graph g = Graph::from_edges(1, {});
    auto rf = RankingFunction::sample(1, 1, 1, 9);
    CachedRankingOrder ord(rf);
    GraphOracle oracle(g);
    auto res = lca_answer_method1(oracle, ord, Problem::coloring, 0);
    CHECK(res.output == 1);
    CHECK(res.t_v == 1);
    CHECK(res.t_e == 0);
    CHECK(res.queries == 1);
}

TEST_CASE("inquiries respect the exploration budget") {
    const VertexId n = 30;
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) edges.emplace_back(0, v);
    Graph star = Graph::from_edges(n, edges);
    std::vector<std::uint32_t> pos(n);
    pos[0] = n - 1;
    for (VertexId v = 1; v < n; ++v) pos[v] = v - 1;
    PermutationOrder ord(pos);

    ExploreOptions opt;
    opt.budget = 5;
    GraphOracle o1(star);
    CHECK_THROWS_AS(lca_answer_method1(o1, ord, Problem::mis, 0, opt), BudgetError);
    GraphOracle o2(star);
    CHECK_THROWS_AS(lca_answer_method2(o2, ord, Problem::mis, 0, opt), BudgetError);
}

TEST_CASE("out-of-range inquiries are rejected") {
    Graph g = random_graph(10, 2.0, 1);
    auto rf = RankingFunction::sample(10, 2, 2, 1);
    CachedRankingOrder ord(rf);
    GraphOracle oracle(g);
    CHECK_THROWS_AS(lca_answer_method1(oracle, ord, Problem::mis, 10), ParamError);
    CHECK_THROWS_AS(lca_answer_method2(oracle, ord, Problem::mis, 10), ParamError);
}
