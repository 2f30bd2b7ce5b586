#pragma once

#include <iosfwd>
#include <string>

#include "lcalab/graph.hpp"

namespace lcalab {

// Text format: header "n m", then m lines "u v" with u < v, 0-indexed, in
// lexicographic order. The writer emits canonical form; the reader rejects
// anything else, so save/load round-trips are byte-exact.
void save_graph(const Graph& g, std::ostream& out);
void save_graph(const Graph& g, const std::string& path);

Graph load_graph(std::istream& in);              // throws ParseError
Graph load_graph(const std::string& path);       // throws IoError / ParseError

}  // namespace lcalab
