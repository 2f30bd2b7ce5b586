#pragma once

#include <cstdint>

#include "lcalab/graph.hpp"

namespace lcalab {

// Number of simple paths with exactly t edges that start at v.  Exhaustive
// DFS; throws BudgetError once the count exceeds cap.  t == 0 counts the
// empty path.
std::uint64_t count_simple_paths(const Graph& g, VertexId v, std::uint32_t t,
                                 std::uint64_t cap = 100'000'000);

}  // namespace lcalab
