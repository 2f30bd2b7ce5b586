#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lcalab {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;  // canonical: (min, max)

// Immutable undirected simple graph over vertices 0..n-1, stored in compressed
// adjacency form. Adjacency lists are strictly increasing; m is the edge count.
class Graph {
  public:
    Graph() = default;

    // `edges` may be in any order and orientation; self-loops and duplicates
    // throw ParamError.
    static Graph from_edges(VertexId n, std::vector<Edge> edges);

    VertexId n() const { return n_; }
    std::uint64_t m() const { return m_; }

    std::span<const VertexId> neighbors(VertexId v) const;
    VertexId degree(VertexId v) const;
    VertexId max_degree() const;

    // Edges in lexicographic (u, v) order with u < v.
    std::vector<Edge> edge_list() const;

    bool operator==(const Graph&) const = default;

  private:
    VertexId n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_;  // n+1 entries
    std::vector<VertexId> adj_;
};

// Neighbor-query session over a shared immutable graph. `neighbors` is the
// unit of query accounting; `peek` rereads an already-discovered list without
// charging the counter (used when positional edge records are replayed).
class GraphOracle {
  public:
    explicit GraphOracle(const Graph& g) : g_(&g) {}

    std::span<const VertexId> neighbors(VertexId v) {
        ++queries_;
        return g_->neighbors(v);
    }
    std::span<const VertexId> peek(VertexId v) const { return g_->neighbors(v); }

    std::uint64_t size() const { return g_->n(); }
    std::uint64_t queries() const { return queries_; }
    void reset() { queries_ = 0; }

  private:
    const Graph* g_;
    std::uint64_t queries_ = 0;
};

}  // namespace lcalab
