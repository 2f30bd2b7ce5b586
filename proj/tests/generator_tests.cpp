#include <doctest.h>

#include <algorithm>
#include <cstdint>

#include "lcalab/errors.hpp"
#include "lcalab/generator.hpp"

using namespace lcalab;

TEST_CASE("model names round-trip") {
    for (auto m : {GraphModel::regular, GraphModel::gnp, GraphModel::bipartite,
                   GraphModel::tree}) {
        CHECK(graph_model_from_string(to_string(m)) == m);
    }
    CHECK_THROWS_AS(graph_model_from_string("hypercube"), ParamError);
}

TEST_CASE("regular model produces a simple d-regular graph") {
    GeneratorSpec spec;
    spec.model = GraphModel::regular;
    spec.n = 100;
    spec.d = 3;
    spec.rng_seed = 11;
    Graph g = generate(spec);
    CHECK(g.n() == 100);
    CHECK(g.m() == 150);
    for (VertexId v = 0; v < g.n(); ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("regular model rejects odd n*d and d >= n") {
    GeneratorSpec spec;
    spec.model = GraphModel::regular;
    spec.n = 5;
    spec.d = 3;
    CHECK_THROWS_AS(generate(spec), ParamError);
    spec.n = 4;
    spec.d = 4;
    CHECK_THROWS_AS(generate(spec), ParamError);
    spec.n = 4;
    spec.d = 2.5;
    CHECK_THROWS_AS(generate(spec), ParamError);
}

TEST_CASE("gnp edge count lands near n*d/2") {
    GeneratorSpec spec;
    spec.model = GraphModel::gnp;
    spec.n = 4000;
    spec.d = 3.0;
    spec.rng_seed = 5;
    Graph g = generate(spec);
    CHECK(g.n() == 4000);
    // mean 6000, sd ~77; allow 6 sigma
    CHECK(g.m() > 5500);
    CHECK(g.m() < 6500);
}

TEST_CASE("gnp degenerate parameters") {
    GeneratorSpec spec;
    spec.model = GraphModel::gnp;
    spec.n = 50;
    spec.d = 0.0;
    CHECK(generate(spec).m() == 0);
    spec.d = 49.0;  // p = 1: the complete graph
    CHECK(generate(spec).m() == 50 * 49 / 2);
    spec.d = 50.0;
    CHECK_THROWS_AS(generate(spec), ParamError);
}

TEST_CASE("bipartite consumers have degree d toward producers") {
    GeneratorSpec spec;
    spec.model = GraphModel::bipartite;
    spec.n = 200;   // consumers 0..199
    spec.m = 40;    // producers 200..239
    spec.d = 3;
    spec.rng_seed = 2;
    Graph g = generate(spec);
    CHECK(g.n() == 240);
    CHECK(g.m() == 600);
    for (VertexId c = 0; c < 200; ++c) {
        CHECK(g.degree(c) == 3);
        for (VertexId p : g.neighbors(c)) CHECK(p >= 200);
    }
    spec.d = 41;  // more producers required than exist
    CHECK_THROWS_AS(generate(spec), ParamError);
    spec.d = 3;
    spec.m = 0;
    CHECK_THROWS_AS(generate(spec), ParamError);
}

TEST_CASE("tree model builds a complete d-ary tree") {
    CHECK(dary_tree_size(3, 0) == 1);
    CHECK(dary_tree_size(3, 2) == 13);
    CHECK(dary_tree_size(1, 999) == 1000);
    CHECK(dary_tree_size(2, 8) == 511);

    GeneratorSpec spec;
    spec.model = GraphModel::tree;
    spec.d = 3;
    spec.depth = 2;
    Graph g = generate(spec);
    CHECK(g.n() == 13);
    CHECK(g.m() == 12);
    CHECK(g.degree(0) == 3);
    for (VertexId v = 4; v < 13; ++v) CHECK(g.degree(v) == 1);  // leaves
    // parent of v is (v-1)/d
    for (VertexId v = 1; v < 13; ++v) {
        auto nb = g.neighbors(v);
        CHECK(std::find(nb.begin(), nb.end(), (v - 1) / 3) != nb.end());
    }
}

TEST_CASE("a 1-ary tree of depth k is the path on k+1 vertices") {
    GeneratorSpec spec;
    spec.model = GraphModel::tree;
    spec.d = 1;
    spec.depth = 9;
    Graph g = generate(spec);
    CHECK(g.n() == 10);
    CHECK(g.m() == 9);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(9) == 1);
    for (VertexId v = 1; v < 9; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("generation is deterministic in the seed") {
    GeneratorSpec spec;
    spec.model = GraphModel::gnp;
    spec.n = 500;
    spec.d = 4.0;
    spec.rng_seed = 77;
    Graph a = generate(spec);
    Graph b = generate(spec);
    CHECK(a == b);
    spec.rng_seed = 78;
    CHECK(!(a == generate(spec)));

    spec.model = GraphModel::regular;
    spec.d = 3;
    spec.n = 500;
    spec.rng_seed = 77;
    CHECK(generate(spec) == generate(spec));
}
