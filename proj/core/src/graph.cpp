#include "lcalab/graph.hpp"

#include <algorithm>
#include <string>

#include "lcalab/errors.hpp"

namespace lcalab {

Graph Graph::from_edges(VertexId n, std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
        if (u == v)
            throw ParamError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (v >= n)
            throw ParamError("vertex id " + std::to_string(v) + " out of range (n=" +
                             std::to_string(n) + ")");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        auto it = std::adjacent_find(edges.begin(), edges.end());
        throw ParamError("duplicate edge (" + std::to_string(it->first) + ", " +
                         std::to_string(it->second) + ")");
    }

    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    std::vector<std::uint64_t> deg(n + 1, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(2 * edges.size());
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (VertexId v = 0; v < n; ++v)
        std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    return g;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    if (v >= n_)
        throw ParamError("vertex id " + std::to_string(v) + " out of range (n=" +
                         std::to_string(n_) + ")");
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
}

VertexId Graph::degree(VertexId v) const {
    if (v >= n_)
        throw ParamError("vertex id " + std::to_string(v) + " out of range (n=" +
                         std::to_string(n_) + ")");
    return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]);
}

VertexId Graph::max_degree() const {
    VertexId best = 0;
    for (VertexId v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> edges;
    edges.reserve(m_);
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

}  // namespace lcalab
