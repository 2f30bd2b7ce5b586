#include <doctest.h>

#include "lcalab/experiments.hpp"
#include "lcalab/generator.hpp"

using namespace lcalab;
using namespace lcalab::experiments;

TEST_CASE("exposure run on a sparse random graph passes its edge bound") {
    ExposureParams p;
    p.graph.model = GraphModel::gnp;
    p.graph.n = 2000;
    p.graph.d = 3.0;
    p.graph.rng_seed = 123;
    p.s = 32;
    p.trials = 50;
    auto rep = run_exposure(p);
    CHECK(rep.pass);
    CHECK(rep.params["trials"] == 50);
    CHECK(rep.metrics["exceed_count"] == 0);
    CHECK(rep.metrics["max_ratio"].get<double>() < p.threshold);
}

TEST_CASE("exposure reruns reproduce the same metrics") {
    ExposureParams p;
    p.graph.model = GraphModel::gnp;
    p.graph.n = 500;
    p.graph.d = 3.0;
    p.graph.rng_seed = 9;
    p.s = 16;
    p.trials = 20;
    auto a = run_exposure(p);
    auto b = run_exposure(p);
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("tightness run recovers the exact root-vicinity mean") {
    TightnessParams p;  // d=2, depth=1: exact mean 2
    p.trials = 100'000;
    auto rep = run_tightness(p);
    CHECK(rep.pass);
    CHECK(rep.metrics["exact_mean"].get<double>() == doctest::Approx(2.0));
    double mean = rep.metrics["mean_t_v"].get<double>();
    CHECK(mean > 1.96);
    CHECK(mean < 2.04);
}

TEST_CASE("dominance run covers the requested grid point") {
    auto rep = run_dominance(6, 2);
    CHECK(rep.pass);
    CHECK(rep.metrics["shift_ok"] == true);
    CHECK(rep.metrics["sum_positive_holds"] == true);
    CHECK(rep.metrics["sum_negative_detected"] == true);
    CHECK(rep.metrics["alphas_checked"] == 5);
}

TEST_CASE("legal-path run reports the exact probability") {
    LegalPathParams p;  // L=3, t=2
    p.enum_L_max = 4;
    p.enum_t_max = 4;
    p.bound_max = 16;
    auto rep = run_legal_paths(p);
    CHECK(rep.pass);
    CHECK(rep.metrics["probability"] == "2/3");
    CHECK(rep.metrics["count"] == "6");
}

TEST_CASE("level-balance smoke run stays under its ratio threshold") {
    LevelBalanceParams p;
    p.n = 1 << 12;
    p.seeds = 20;
    auto rep = run_level_balance(p);
    CHECK(rep.pass);
    CHECK(rep.params["seeds"] == 20);
    CHECK(rep.metrics["exceed_count"].get<std::uint64_t>() == 0);
}

TEST_CASE("scaling sweep aggregates are structurally sound") {
    ScalingParams p;
    p.n_grid = {256, 512};
    p.graphs = 2;
    p.seeds = 2;
    p.centers = 50;
    auto agg = scaling_sweep(p);
    REQUIRE(agg.size() == 2);
    for (const auto& a : agg) {
        CHECK(a.inquiries == 2ull * 2 * 50);
        CHECK(a.max_tv >= 1);
        CHECK(a.mean_tv >= 1.0);
        CHECK(a.mean_te >= a.mean_tv - 1);
        CHECK(a.mean_te2 >= a.mean_te);
        CHECK(a.budget_exceeded == 0);
    }
    CHECK(agg[0].n == 256);
    CHECK(agg[1].n == 512);

    // both consumers accept a precomputed sweep
    auto sc = run_scaling(p, agg);
    CHECK(sc.metrics["grid"].size() == 2);
    auto mo = run_moments(p, agg);
    CHECK(mo.metrics["grid"].size() == 2);
    CHECK(mo.metrics.contains("slope_mean_t_e"));
}

TEST_CASE("vicinity stats echo one record per exploration") {
    GeneratorSpec spec;
    spec.model = GraphModel::gnp;
    spec.n = 400;
    spec.d = 3.0;
    spec.rng_seed = 5;
    Graph g = generate(spec);

    StatsParams p;
    p.d = 3.0;
    p.seeds = 2;
    p.centers = 30;
    std::vector<StatsRecord> records;
    auto rep = vicinity_stats(g, p, &records);
    CHECK(records.size() == 60);
    for (const auto& r : records) {
        CHECK(r.center < g.n());
        CHECK(r.t_v >= 1);
        CHECK(r.queries == r.t_v);
        CHECK(!r.budget_exceeded);
    }
    CHECK(rep.metrics["inquiries"] == 60);
    CHECK(rep.metrics["t_v"].contains("p99"));
}
