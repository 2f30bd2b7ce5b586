#pragma once

#include <cstdint>
#include <string>

#include "lcalab/graph.hpp"

namespace lcalab {

enum class GraphModel { regular, gnp, bipartite, tree };

GraphModel graph_model_from_string(const std::string& s);
std::string to_string(GraphModel m);

// regular:   random d-regular simple graph on n vertices (pairing construction).
// gnp:       each of the C(n,2) edges present independently with prob d/(n-1).
// bipartite: n consumers (ids 0..n-1), m producers (ids n..n+m-1); each
//            consumer connects to d distinct uniform producers.
// tree:      complete d-ary tree of the given depth; n is derived.
struct GeneratorSpec {
    GraphModel model = GraphModel::gnp;
    VertexId n = 0;
    double d = 0.0;       // degree parameter; must be integral except for gnp
    VertexId m = 0;       // producer count (bipartite only)
    std::uint32_t depth = 0;  // tree only
    std::uint64_t rng_seed = 0;

    void validate() const;  // throws ParamError naming the violated constraint
};

Graph generate(const GeneratorSpec& spec);

// Number of vertices of the complete d-ary tree of the given depth.
std::uint64_t dary_tree_size(std::uint32_t d, std::uint32_t depth);

}  // namespace lcalab
