#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lcalab/online.hpp"
#include "lcalab/vicinity.hpp"

namespace lcalab {

struct InquiryResult {
    VertexId vertex = 0;
    Value output = 0;
    std::uint64_t t_v = 0;
    std::uint64_t t_e = 0;
    std::uint64_t queries = 0;
    std::uint64_t time_ns = 0;    // wall clock; excluded from canonical output
    std::uint64_t peak_words = 0;  // accounting estimate, not an OS measurement
};

namespace detail {

inline std::uint32_t bits_for(std::uint64_t max_value) {
    return std::max<std::uint32_t>(1, std::bit_width(max_value));
}

inline std::uint64_t now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

}  // namespace detail

// Construction A ("full labels"): discover the relevant vicinity, keep the
// original ids, sort the members by rank and replay the online rule over
// them. Fast, but stores one full-width id per stored vertex/edge;
// peak_words charges 3 words per member (id, level, value) and 2 per edge.
template <typename O, typename R>
    requires NeighborOracle<O> && Ordering<R>
InquiryResult lca_answer_method1(O& oracle, const R& ord, Problem p, VertexId center,
                                 const ExploreOptions& opt = {}) {
    std::uint64_t start = detail::now_ns();
    Vicinity vic = relevant_vicinity(oracle, ord, center, opt);

    const auto& mem = vic.members;
    auto local_index = [&](VertexId v) -> std::optional<std::size_t> {
        auto it = std::lower_bound(mem.begin(), mem.end(), v);
        if (it == mem.end() || *it != v) return std::nullopt;
        return static_cast<std::size_t>(it - mem.begin());
    };

    std::vector<std::vector<std::uint32_t>> adj(mem.size());
    for (const auto& [u, v] : vic.adjacent_edges) {
        auto iu = local_index(u), iv = local_index(v);
        if (iu && iv) {
            adj[*iu].push_back(static_cast<std::uint32_t>(*iv));
            adj[*iv].push_back(static_cast<std::uint32_t>(*iu));
        }
    }

    std::vector<std::size_t> order(mem.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ord.rank(mem[a]) < ord.rank(mem[b]);
    });

    std::vector<Value> val(mem.size(), 0);
    std::vector<char> done(mem.size(), 0);
    std::vector<std::pair<VertexId, Value>> earlier;
    for (std::size_t i : order) {
        earlier.clear();
        for (std::uint32_t j : adj[i])
            if (done[j]) earlier.emplace_back(mem[j], val[j]);
        std::sort(earlier.begin(), earlier.end(), [&](const auto& a, const auto& b) {
            return ord.rank(a.first) < ord.rank(b.first);
        });
        val[i] = decide(p, mem[i], earlier);
        done[i] = 1;
    }

    InquiryResult res;
    res.vertex = center;
    res.output = val[*local_index(center)];
    res.t_v = vic.t_v;
    res.t_e = vic.t_e;
    res.queries = vic.queries;
    res.peak_words = 3 * vic.t_v + 2 * vic.t_e;
    res.time_ns = detail::now_ns() - start;
    return res;
}

// Construction B ("short labels"): discover the vicinity one vertex per round
// in descending rank order, storing members and edges under small sequential
// labels instead of original ids. Two structures are kept: the member
// adjacency (edges between labeled members, each with its position in the
// discovering vertex's neighbor list) and the frontier (neighbors of the
// member set not yet admitted, keyed only by level plus their incident edge
// positions). Original ids are never stored; when one is needed it is
// recovered by replaying stored edge positions against the oracle with
// uncharged positional reads. After discovery the online rule is replayed in
// reverse label order. peak_words charges the bit-level cost of the label
// structures (see README for the formula).
template <typename O, typename R>
    requires NeighborOracle<O> && Ordering<R>
InquiryResult lca_answer_method2(O& oracle, const R& ord, Problem p, VertexId center,
                                 const ExploreOptions& opt = {}) {
    std::uint64_t start = detail::now_ns();
    if (center >= oracle.size()) throw ParamError("lca_answer_method2: center out of range");
    if (opt.budget < 1) throw BudgetError(opt.budget);

    struct Member {
        std::uint32_t level;
        std::uint32_t parent_label;  // 0 for the center
        std::uint32_t parent_pos;    // position in the parent's neighbor list
    };
    struct MemberEdge {
        std::uint32_t from_label;  // the endpoint that discovered the edge
        std::uint32_t to_label;
        std::uint32_t pos;  // position in from's neighbor list
    };
    struct Frontier {
        std::uint32_t level;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> inc;  // (label, pos)
    };

    std::vector<Member> members;
    std::vector<MemberEdge> edges;
    std::vector<Frontier> frontier;

    // Transient per-round scratch; rebuilt from edge positions each round, so
    // original ids never persist between rounds.
    std::vector<VertexId> ids;
    std::vector<VertexId> frontier_ids;

    std::uint64_t peak_bits = 0;
    std::uint32_t max_level_seen = 1, max_pos_seen = 0;
    auto account = [&]() {
        std::uint32_t label_bits = detail::bits_for(members.size());
        std::uint32_t pos_bits = detail::bits_for(max_pos_seen);
        std::uint32_t level_bits = detail::bits_for(max_level_seen);
        std::uint64_t bits = 0;
        bits += members.size() * (level_bits + label_bits + pos_bits);
        bits += edges.size() * (2 * label_bits + pos_bits + 1);  // +1: direction
        for (const auto& f : frontier)
            bits += level_bits + f.inc.size() * (label_bits + pos_bits);
        bits += members.size() * (label_bits + pos_bits);  // recovery scratch
        peak_bits = std::max(peak_bits, bits);
    };

    auto neighbor_at = [&](VertexId v, std::uint32_t pos) -> VertexId {
        auto nbrs = oracle.peek(v);
        return *(std::ranges::begin(nbrs) + pos);
    };

    auto recover_ids = [&]() {
        ids.resize(members.size());
        ids[0] = center;
        for (std::size_t i = 1; i < members.size(); ++i)
            ids[i] = neighbor_at(ids[members[i].parent_label - 1], members[i].parent_pos);
        frontier_ids.resize(frontier.size());
        for (std::size_t f = 0; f < frontier.size(); ++f) {
            const auto& [lbl, pos] = frontier[f].inc.front();
            frontier_ids[f] = neighbor_at(ids[lbl - 1], pos);
        }
    };

    // Admits `id` as the next member and scans its neighborhood (the one
    // charged query per member), filing each edge as a member edge or a
    // frontier incidence. `via` is the frontier slot being promoted (none for
    // the center).
    auto admit = [&](VertexId id, std::optional<std::size_t> via) {
        if (members.size() >= opt.budget) throw BudgetError(opt.budget);
        auto label = static_cast<std::uint32_t>(members.size() + 1);
        if (via) {
            Frontier& f = frontier[*via];
            members.push_back({f.level, f.inc.front().first, f.inc.front().second});
            for (const auto& [lbl, pos] : f.inc) {
                edges.push_back({lbl, label, pos});
                max_pos_seen = std::max(max_pos_seen, pos);
            }
            frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(*via));
            frontier_ids.erase(frontier_ids.begin() + static_cast<std::ptrdiff_t>(*via));
        } else {
            members.push_back({ord.level(id), 0, 0});
        }
        max_level_seen = std::max(max_level_seen, members.back().level);
        ids.push_back(id);

        auto nbrs = oracle.neighbors(id);
        std::uint32_t pos = 0;
        for (VertexId x : nbrs) {
            bool is_member = false;
            for (std::size_t i = 0; i < ids.size(); ++i)
                if (ids[i] == x) {
                    is_member = true;
                    break;
                }
            if (!is_member) {
                bool found = false;
                for (std::size_t f = 0; f < frontier_ids.size(); ++f)
                    if (frontier_ids[f] == x) {
                        frontier[f].inc.emplace_back(label, pos);
                        max_pos_seen = std::max(max_pos_seen, pos);
                        found = true;
                        break;
                    }
                if (!found) {
                    frontier.push_back({static_cast<std::uint32_t>(ord.level(x)),
                                        {{label, pos}}});
                    frontier_ids.push_back(x);
                    max_level_seen = std::max(max_level_seen, frontier.back().level);
                    max_pos_seen = std::max(max_pos_seen, pos);
                }
            }
            ++pos;
        }
        account();
    };

    std::uint64_t queries_before = oracle.queries();
    admit(center, std::nullopt);

    for (;;) {
        recover_ids();
        // Eligible: frontier vertices that arrive before at least one member
        // they touch; the latest-arriving eligible one is the next member.
        std::optional<std::size_t> best;
        for (std::size_t f = 0; f < frontier.size(); ++f) {
            Rank fr{frontier[f].level, frontier_ids[f]};
            bool eligible = false;
            for (const auto& [lbl, pos] : frontier[f].inc) {
                Rank mr{members[lbl - 1].level, ids[lbl - 1]};
                if (fr < mr) {
                    eligible = true;
                    break;
                }
            }
            if (!eligible) continue;
            if (!best || Rank{frontier[*best].level, frontier_ids[*best]} < fr) best = f;
        }
        if (!best) break;
        admit(frontier_ids[*best], best);
    }

    std::uint64_t t_v = members.size();
    std::uint64_t t_e = edges.size();
    for (const auto& f : frontier) t_e += f.inc.size();

    // Replay in reverse label order (labels were assigned in descending rank,
    // so reverse label order is ascending arrival order).
    std::vector<std::vector<std::uint32_t>> adj(t_v);
    for (const auto& e : edges) {
        adj[e.from_label - 1].push_back(e.to_label);
        adj[e.to_label - 1].push_back(e.from_label);
    }
    recover_ids();
    std::vector<Value> val(t_v, 0);
    Value max_color = 1;
    std::vector<std::pair<VertexId, Value>> earlier;
    for (std::uint32_t label = static_cast<std::uint32_t>(t_v); label >= 1; --label) {
        earlier.clear();
        auto& nb = adj[label - 1];
        std::sort(nb.begin(), nb.end(), std::greater<>());  // descending = rank order
        for (std::uint32_t other : nb)
            if (other > label) earlier.emplace_back(ids[other - 1], val[other - 1]);
        val[label - 1] = decide(p, ids[label - 1], earlier);
        max_color = std::max(max_color, val[label - 1]);
        if (label == 1) break;
    }
    std::uint32_t value_bits =
        p == Problem::coloring ? detail::bits_for(static_cast<std::uint64_t>(max_color)) : 1;
    std::uint64_t final_bits = peak_bits + t_v * value_bits;

    InquiryResult res;
    res.vertex = center;
    res.output = val[0];
    res.t_v = t_v;
    res.t_e = t_e;
    res.queries = oracle.queries() - queries_before;
    res.peak_words = (final_bits + 63) / 64;
    res.time_ns = detail::now_ns() - start;
    return res;
}

}  // namespace lcalab
