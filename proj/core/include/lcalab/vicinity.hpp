#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <deque>
#include <map>
#include <unordered_set>
#include <vector>

#include "lcalab/errors.hpp"
#include "lcalab/graph.hpp"
#include "lcalab/ranking.hpp"

namespace lcalab {

// Anything that can answer neighbor queries over dense ids 0..size()-1.
// `neighbors` charges the query counter; `peek` does not.
template <typename O>
concept NeighborOracle = requires(O o, const O co, VertexId v) {
    { o.neighbors(v) } -> std::ranges::forward_range;
    { co.peek(v) } -> std::ranges::forward_range;
    { co.size() } -> std::convertible_to<std::uint64_t>;
    { co.queries() } -> std::convertible_to<std::uint64_t>;
};

// Arrival order given by (level(v), v); precedes(u, v) means u arrives first.
template <typename R>
concept Ordering = requires(const R r, VertexId u, VertexId v) {
    { r.level(v) } -> std::convertible_to<std::uint32_t>;
    { r.rank(v) } -> std::convertible_to<Rank>;
    { r.precedes(u, v) } -> std::convertible_to<bool>;
};

// Memoizes levels of a RankingFunction for the lifetime of one inquiry.
class CachedRankingOrder {
  public:
    explicit CachedRankingOrder(const RankingFunction& rf)
        : rf_(&rf), levels_(rf.n(), 0) {}

    std::uint32_t level(VertexId v) const {
        if (levels_[v] == 0) {
            levels_[v] = rf_->level(v);
            ++evals_;
        }
        return levels_[v];
    }
    Rank rank(VertexId v) const { return {level(v), v}; }
    bool precedes(VertexId u, VertexId v) const { return rank(u) < rank(v); }
    std::uint64_t hash_evals() const { return evals_; }

  private:
    const RankingFunction* rf_;
    mutable std::vector<std::uint32_t> levels_;  // 0 = not yet evaluated
    mutable std::uint64_t evals_ = 0;
};

// Full-entropy uniform order: rank of v is (position(v)+1, v), all distinct.
class PermutationOrder {
  public:
    // positions[v] = place of v in the arrival order, 0-based.
    explicit PermutationOrder(std::vector<std::uint32_t> positions)
        : pos_(std::move(positions)) {}

    std::uint32_t level(VertexId v) const { return pos_[v] + 1; }
    Rank rank(VertexId v) const { return {level(v), v}; }
    bool precedes(VertexId u, VertexId v) const { return pos_[u] < pos_[v]; }

  private:
    std::vector<std::uint32_t> pos_;
};

enum class Traversal { dfs, bfs };
enum class OnBudget { raise, mark };

struct ExploreOptions {
    std::uint64_t budget = 1'000'000;  // max member count
    Traversal traversal = Traversal::dfs;
    OnBudget on_budget = OnBudget::raise;
};

// Least fixed point of: start from the center, repeatedly add each neighbor
// that arrives before the member it hangs off. Exactly the vertex set an
// order-replaying local algorithm must look at.
struct Vicinity {
    VertexId center = 0;
    std::vector<VertexId> members;   // sorted ascending
    std::vector<Edge> adjacent_edges;  // canonical (min,max), sorted, unique
    std::uint64_t t_v = 0;           // |members|
    std::uint64_t t_e = 0;           // |adjacent_edges|
    std::uint64_t queries = 0;       // neighbor fetches consumed
    bool budget_exceeded = false;

    bool is_member(VertexId v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }

    // Members plus every endpoint of an adjacent edge, sorted.
    std::vector<VertexId> touched() const {
        std::vector<VertexId> out = members;
        for (const auto& [u, v] : adjacent_edges) {
            out.push_back(u);
            out.push_back(v);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

template <typename O, typename R>
    requires NeighborOracle<O> && Ordering<R>
Vicinity relevant_vicinity(O& oracle, const R& ord, VertexId center,
                           const ExploreOptions& opt = {}) {
    if (center >= oracle.size()) throw ParamError("relevant_vicinity: center out of range");
    Vicinity vic;
    vic.center = center;

    std::uint64_t queries_before = oracle.queries();
    std::unordered_set<VertexId> visited{center};
    std::deque<VertexId> worklist{center};
    std::vector<Edge> edges;

    while (!worklist.empty()) {
        VertexId u;
        if (opt.traversal == Traversal::dfs) {
            u = worklist.back();
            worklist.pop_back();
        } else {
            u = worklist.front();
            worklist.pop_front();
        }
        auto nbrs = oracle.neighbors(u);
        for (VertexId w : nbrs) edges.emplace_back(std::min(u, w), std::max(u, w));
        for (VertexId w : nbrs) {
            if (!visited.contains(w) && ord.precedes(w, u)) {
                if (visited.size() >= opt.budget) {
                    vic.budget_exceeded = true;
                    if (opt.on_budget == OnBudget::raise) throw BudgetError(opt.budget);
                    worklist.clear();
                    break;
                }
                visited.insert(w);
                worklist.push_back(w);
            }
        }
        if (vic.budget_exceeded) break;
    }

    vic.members.assign(visited.begin(), visited.end());
    std::sort(vic.members.begin(), vic.members.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    vic.adjacent_edges = std::move(edges);
    vic.t_v = vic.members.size();
    vic.t_e = vic.adjacent_edges.size();
    vic.queries = oracle.queries() - queries_before;
    return vic;
}

// Closure of `base` under adding level-`lvl` neighbors. The cache maps vertex
// to its fetched neighbor list so repeated stages reuse earlier queries.
template <typename O, typename R>
    requires NeighborOracle<O> && Ordering<R>
std::vector<VertexId> levelhood(O& oracle, const R& ord,
                                const std::vector<VertexId>& base, std::uint32_t lvl,
                                std::uint64_t budget,
                                std::map<VertexId, std::vector<VertexId>>& cache) {
    std::unordered_set<VertexId> in_set(base.begin(), base.end());
    std::deque<VertexId> pending(base.begin(), base.end());
    while (!pending.empty()) {
        VertexId u = pending.front();
        pending.pop_front();
        auto it = cache.find(u);
        if (it == cache.end()) {
            auto nbrs = oracle.neighbors(u);
            it = cache.emplace(u, std::vector<VertexId>(nbrs.begin(), nbrs.end())).first;
        }
        for (VertexId w : it->second) {
            if (!in_set.contains(w) && ord.level(w) == lvl) {
                if (in_set.size() >= budget) throw BudgetError(budget);
                in_set.insert(w);
                pending.push_back(w);
            }
        }
    }
    std::vector<VertexId> out(in_set.begin(), in_set.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Worst-case superset of the relevant vicinity: close under same-level
// neighbors at the center's level, then repeat one level down at a time.
// A level-tied neighbor may or may not precede its discoverer (the id breaks
// the tie), so each stage assumes it always does.
struct ContainingVicinity {
    VertexId center = 0;
    std::vector<std::vector<VertexId>> stages;  // stage i: levels center..center-i
    std::vector<VertexId> members;              // final stage, sorted
};

template <typename O, typename R>
    requires NeighborOracle<O> && Ordering<R>
ContainingVicinity containing_vicinity(O& oracle, const R& ord, VertexId center,
                                       std::uint64_t budget = 1'000'000) {
    if (center >= oracle.size())
        throw ParamError("containing_vicinity: center out of range");
    ContainingVicinity cv;
    cv.center = center;
    std::map<VertexId, std::vector<VertexId>> cache;
    std::vector<VertexId> current{center};
    for (std::uint32_t lvl = ord.level(center); lvl >= 1; --lvl) {
        current = levelhood(oracle, ord, current, lvl, budget, cache);
        cv.stages.push_back(current);
        if (lvl == 1) break;
    }
    cv.members = current;
    return cv;
}

}  // namespace lcalab
