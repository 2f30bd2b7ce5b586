#include "lcalab/online.hpp"

#include <algorithm>

#include "lcalab/errors.hpp"

namespace lcalab {

Problem problem_from_string(const std::string& s) {
    if (s == "mis") return Problem::mis;
    if (s == "matching") return Problem::matching;
    if (s == "coloring") return Problem::coloring;
    throw ParamError("unknown problem '" + s + "'");
}

std::string to_string(Problem p) {
    switch (p) {
        case Problem::mis: return "mis";
        case Problem::matching: return "matching";
        case Problem::coloring: return "coloring";
    }
    return "?";
}

std::string value_to_string(Problem p, Value v) {
    switch (p) {
        case Problem::mis: return v ? "IN" : "OUT";
        case Problem::matching: return v ? "MATCHED" : "UNMATCHED";
        case Problem::coloring: return std::to_string(v);
    }
    return "?";
}

Value decide(Problem p, VertexId /*v*/,
             std::span<const std::pair<VertexId, Value>> earlier) {
    switch (p) {
        case Problem::mis:
        case Problem::matching: {
            for (const auto& [u, val] : earlier)
                if (val == 1) return 0;
            return 1;
        }
        case Problem::coloring: {
            std::vector<bool> used(earlier.size() + 2, false);
            for (const auto& [u, val] : earlier)
                if (val >= 1 && static_cast<std::size_t>(val) < used.size())
                    used[val] = true;
            Value c = 1;
            while (used[c]) ++c;
            return c;
        }
    }
    throw ParamError("unknown problem");
}

EdgeIndex::EdgeIndex(const Graph& g) : g_(&g), m_(g.m()) {
    if (m_ > UINT32_MAX) throw ParamError("edge index: too many edges");
    row_offset_.assign(g.n() + 1, 0);
    for (VertexId u = 0; u < g.n(); ++u) {
        auto nbrs = g.neighbors(u);
        std::uint64_t higher =
            nbrs.end() - std::upper_bound(nbrs.begin(), nbrs.end(), u);
        row_offset_[u + 1] = row_offset_[u] + higher;
    }
}

std::uint32_t EdgeIndex::edge_id(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    auto nbrs = g_->neighbors(u);
    auto first_higher = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    auto it = std::lower_bound(first_higher, nbrs.end(), v);
    if (it == nbrs.end() || *it != v)
        throw ParamError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") not in graph");
    return static_cast<std::uint32_t>(row_offset_[u] + (it - first_higher));
}

Edge EdgeIndex::endpoints(std::uint32_t e) const {
    if (e >= m_) throw ParamError("edge id " + std::to_string(e) + " out of range");
    auto it = std::upper_bound(row_offset_.begin(), row_offset_.end(), e);
    auto u = static_cast<VertexId>(it - row_offset_.begin() - 1);
    auto nbrs = g_->neighbors(u);
    auto first_higher = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    VertexId v = *(first_higher + (e - row_offset_[u]));
    return {u, v};
}

std::vector<std::uint32_t> LineGraphOracle::adjacent(std::uint32_t e) const {
    auto [u, v] = idx_->endpoints(e);
    std::vector<std::uint32_t> out;
    for (VertexId w : g_->neighbors(u))
        if (w != v) out.push_back(idx_->edge_id(u, w));
    for (VertexId w : g_->neighbors(v))
        if (w != u) out.push_back(idx_->edge_id(v, w));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Shared replay: order all ids by rank, feed each its earlier neighbors.
template <typename NeighborsFn>
std::vector<Value> run_in_rank_order(std::uint64_t count, const RankingFunction& rf,
                                     Problem p, NeighborsFn&& neighbors_of) {
    std::vector<VertexId> order(count);
    for (std::uint64_t i = 0; i < count; ++i) order[i] = static_cast<VertexId>(i);
    std::vector<std::uint32_t> level(count);
    for (std::uint64_t i = 0; i < count; ++i)
        level[i] = rf.level(static_cast<VertexId>(i));
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return Rank{level[a], a} < Rank{level[b], b};
    });

    std::vector<Value> values(count, 0);
    std::vector<bool> done(count, false);
    std::vector<std::pair<VertexId, Value>> earlier;
    for (VertexId x : order) {
        earlier.clear();
        for (VertexId y : neighbors_of(x))
            if (done[y]) earlier.emplace_back(y, values[y]);
        std::sort(earlier.begin(), earlier.end(),
                  [&](const auto& a, const auto& b) {
                      return Rank{level[a.first], a.first} <
                             Rank{level[b.first], b.first};
                  });
        values[x] = decide(p, x, earlier);
        done[x] = true;
    }
    return values;
}

}  // namespace

std::vector<Value> global_online_run(const Graph& g, const RankingFunction& rf,
                                     Problem p) {
    if (p == Problem::matching)
        throw ParamError("matching runs over edges; use global_online_run_edges");
    if (rf.n() != g.n()) throw ParamError("ranking domain does not match graph");
    return run_in_rank_order(g.n(), rf, p,
                             [&](VertexId v) { return g.neighbors(v); });
}

std::vector<Value> global_online_run_edges(const Graph& g, const EdgeIndex& idx,
                                           const RankingFunction& rf) {
    if (rf.n() != idx.m()) throw ParamError("ranking domain does not match edge count");
    LineGraphOracle lg(g, idx);
    return run_in_rank_order(idx.m(), rf, Problem::matching,
                             [&](std::uint32_t e) { return lg.peek(e); });
}

VerifyResult verify_assignment(const Graph& g, Problem p,
                               const std::vector<Value>& values) {
    VerifyResult res;
    auto fail = [&](std::string msg) {
        res.ok = false;
        if (res.violations.size() < 100) res.violations.push_back(std::move(msg));
    };

    switch (p) {
        case Problem::mis: {
            if (values.size() != g.n()) {
                fail("assignment size mismatch");
                return res;
            }
            for (const auto& [u, v] : g.edge_list())
                if (values[u] == 1 && values[v] == 1)
                    fail("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                         " are adjacent and both selected");
            for (VertexId v = 0; v < g.n(); ++v) {
                if (values[v] == 1) continue;
                bool covered = false;
                for (VertexId u : g.neighbors(v))
                    if (values[u] == 1) {
                        covered = true;
                        break;
                    }
                if (!covered)
                    fail("vertex " + std::to_string(v) +
                         " is unselected with no selected neighbor");
            }
            break;
        }
        case Problem::matching: {
            EdgeIndex idx(g);
            if (values.size() != idx.m()) {
                fail("assignment size mismatch");
                return res;
            }
            std::vector<std::uint32_t> matched_at(g.n(), UINT32_MAX);
            for (std::uint32_t e = 0; e < idx.m(); ++e) {
                if (values[e] != 1) continue;
                auto [u, v] = idx.endpoints(e);
                for (VertexId end : {u, v}) {
                    if (matched_at[end] != UINT32_MAX)
                        fail("vertex " + std::to_string(end) +
                             " is covered by two matched edges");
                    matched_at[end] = e;
                }
            }
            for (std::uint32_t e = 0; e < idx.m(); ++e) {
                if (values[e] == 1) continue;
                auto [u, v] = idx.endpoints(e);
                if (matched_at[u] == UINT32_MAX && matched_at[v] == UINT32_MAX)
                    fail("edge " + std::to_string(e) +
                         " is unmatched with both endpoints free");
            }
            break;
        }
        case Problem::coloring: {
            if (values.size() != g.n()) {
                fail("assignment size mismatch");
                return res;
            }
            Value cap = static_cast<Value>(g.max_degree()) + 1;
            for (VertexId v = 0; v < g.n(); ++v)
                if (values[v] < 1 || values[v] > cap)
                    fail("vertex " + std::to_string(v) + " has color " +
                         std::to_string(values[v]) + " outside 1.." +
                         std::to_string(cap));
            for (const auto& [u, v] : g.edge_list())
                if (values[u] == values[v])
                    fail("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                         " share color " + std::to_string(values[u]));
            break;
        }
    }
    return res;
}

}  // namespace lcalab
