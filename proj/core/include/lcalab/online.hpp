#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcalab/graph.hpp"
#include "lcalab/ranking.hpp"

namespace lcalab {

enum class Problem { mis, matching, coloring };

Problem problem_from_string(const std::string& s);
std::string to_string(Problem p);

// Output value of one location. mis: 1 = selected, 0 = not; matching (per
// edge): 1 = matched, 0 = unmatched; coloring: color >= 1.
using Value = std::int32_t;

// Renders a value the way the CLI prints it ("IN"/"OUT", "MATCHED"/...).
std::string value_to_string(Problem p, Value v);

// The decision rule applied at one arrival. `earlier` holds the neighbors
// that arrived before `v`, with their already-decided values; the result
// depends only on (v, earlier), which is what makes local replay consistent.
// mis and matching select unless an earlier neighbor did; coloring takes the
// smallest positive color unused by earlier neighbors.
Value decide(Problem p, VertexId v, std::span<const std::pair<VertexId, Value>> earlier);

// Dense edge ids: edges sorted lexicographically as (u, v) with u < v get
// ids 0..m-1 in that order.
class EdgeIndex {
  public:
    explicit EdgeIndex(const Graph& g);

    std::uint64_t m() const { return m_; }
    std::uint32_t edge_id(VertexId u, VertexId v) const;
    Edge endpoints(std::uint32_t e) const;

  private:
    const Graph* g_;
    std::uint64_t m_;
    std::vector<std::uint64_t> row_offset_;  // edges (u, ·) with u < · start here
};

// Neighbor oracle over the implicit line graph: ids are edge ids, neighbors
// are edges sharing an endpoint. Lists are built on the fly from the two
// endpoints' adjacency; one `neighbors` call counts as one query.
class LineGraphOracle {
  public:
    LineGraphOracle(const Graph& g, const EdgeIndex& idx) : g_(&g), idx_(&idx) {}

    std::vector<std::uint32_t> neighbors(std::uint32_t e) {
        ++queries_;
        return adjacent(e);
    }
    std::vector<std::uint32_t> peek(std::uint32_t e) const { return adjacent(e); }

    std::uint64_t size() const { return idx_->m(); }
    std::uint64_t queries() const { return queries_; }
    void reset() { queries_ = 0; }

  private:
    std::vector<std::uint32_t> adjacent(std::uint32_t e) const;

    const Graph* g_;
    const EdgeIndex* idx_;
    std::uint64_t queries_ = 0;
};

// Runs the online algorithm over every location in rank order; the reference
// that all local answers must agree with. For matching, locations are edge
// ids of `idx` and the ranking must be over idx.m() ids.
std::vector<Value> global_online_run(const Graph& g, const RankingFunction& rf,
                                     Problem p);
std::vector<Value> global_online_run_edges(const Graph& g, const EdgeIndex& idx,
                                           const RankingFunction& rf);

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks a total assignment: mis -> independent and maximal; matching ->
// matching and maximal; coloring -> proper with colors in 1..max_degree+1.
VerifyResult verify_assignment(const Graph& g, Problem p,
                               const std::vector<Value>& values);

}  // namespace lcalab
