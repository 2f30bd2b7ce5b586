#include "lcalab/paths.hpp"

#include <vector>

#include "lcalab/errors.hpp"

namespace lcalab {

namespace {

void dfs(const Graph& g, VertexId u, std::uint32_t remaining, std::vector<char>& on_path,
         std::uint64_t& count, std::uint64_t cap) {
    if (remaining == 0) {
        if (++count > cap) throw BudgetError(cap);
        return;
    }
    on_path[u] = 1;
    for (VertexId w : g.neighbors(u))
        if (!on_path[w]) dfs(g, w, remaining - 1, on_path, count, cap);
    on_path[u] = 0;
}

}  // namespace

std::uint64_t count_simple_paths(const Graph& g, VertexId v, std::uint32_t t,
                                 std::uint64_t cap) {
    if (v >= g.n()) throw ParamError("count_simple_paths: vertex out of range");
    std::vector<char> on_path(g.n(), 0);
    std::uint64_t count = 0;
    dfs(g, v, t, on_path, count, cap);
    return count;
}

}  // namespace lcalab
