#include <doctest.h>

#include <algorithm>
#include <vector>

#include "lcalab/errors.hpp"
#include "lcalab/graph.hpp"

using namespace lcalab;

TEST_CASE("from_edges canonicalizes orientation and sorts adjacency") {
    // edges given in reversed orientation, unsorted
    Graph g = Graph::from_edges(4, {{2, 0}, {3, 1}, {1, 0}, {2, 1}});
    CHECK(g.n() == 4);
    CHECK(g.m() == 4);
    auto n1 = g.neighbors(1);
    std::vector<VertexId> v1(n1.begin(), n1.end());
    CHECK(v1 == std::vector<VertexId>{0, 2, 3});
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 1);
    CHECK(g.max_degree() == 3);
}

TEST_CASE("from_edges rejects self-loops, duplicates and range errors") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), ParamError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), ParamError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), ParamError);
    CHECK_THROWS_AS(Graph::from_edges(0, {{0, 1}}), ParamError);
}

TEST_CASE("empty and edgeless graphs") {
    Graph g0 = Graph::from_edges(0, {});
    CHECK(g0.n() == 0);
    CHECK(g0.m() == 0);
    Graph g5 = Graph::from_edges(5, {});
    CHECK(g5.max_degree() == 0);
    CHECK(g5.neighbors(4).empty());
    CHECK_THROWS_AS(g5.neighbors(5), ParamError);
    CHECK_THROWS_AS(g5.degree(5), ParamError);
}

TEST_CASE("edge_list returns the canonical sorted edge list") {
    std::vector<Edge> in = {{2, 0}, {1, 0}, {2, 1}};
    Graph g = Graph::from_edges(3, in);
    std::vector<Edge> expect = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(g.edge_list() == expect);
    CHECK(g == Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST_CASE("degrees sum to twice the edge count") {
    Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {4, 5}});
    std::uint64_t total = 0;
    for (VertexId v = 0; v < g.n(); ++v) total += g.degree(v);
    CHECK(total == 2 * g.m());
}
