#include "lcalab/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "lcalab/errors.hpp"

namespace lcalab {
namespace {

// Parses exactly two space-separated decimal fields; no leading/trailing junk.
void parse_two_u64(const std::string& line, std::size_t lineno, std::uint64_t& a,
                   std::uint64_t& b) {
    const char* begin = line.data();
    const char* end = begin + line.size();
    auto r1 = std::from_chars(begin, end, a);
    if (r1.ec != std::errc() || r1.ptr == begin)
        throw ParseError(lineno, "expected two integers, got '" + line + "'");
    if (r1.ptr == end || *r1.ptr != ' ')
        throw ParseError(lineno, "expected two integers, got '" + line + "'");
    const char* second = r1.ptr + 1;
    auto r2 = std::from_chars(second, end, b);
    if (r2.ec != std::errc() || r2.ptr != end || r2.ptr == second)
        throw ParseError(lineno, "expected two integers, got '" + line + "'");
}

}  // namespace

void save_graph(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
    if (!out) throw IoError("write failure while saving graph");
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    save_graph(g, out);
}

Graph load_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) throw ParseError(1, "missing header");
    ++lineno;
    std::uint64_t n = 0, m = 0;
    parse_two_u64(line, lineno, n, m);
    if (n > UINT32_MAX) throw ParseError(lineno, "vertex count too large");

    std::vector<Edge> edges;
    edges.reserve(m);
    Edge prev{0, 0};
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw ParseError(lineno + 1, "expected " + std::to_string(m) +
                                             " edges, found " + std::to_string(i));
        ++lineno;
        std::uint64_t u = 0, v = 0;
        parse_two_u64(line, lineno, u, v);
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        if (u > v) throw ParseError(lineno, "edge endpoints must satisfy u < v");
        if (v >= n) throw ParseError(lineno, "vertex id " + std::to_string(v) +
                                                 " out of range (n=" + std::to_string(n) + ")");
        Edge e{static_cast<VertexId>(u), static_cast<VertexId>(v)};
        if (i > 0) {
            if (e == prev) throw ParseError(lineno, "duplicate edge");
            if (e < prev) throw ParseError(lineno, "edges out of lexicographic order");
        }
        prev = e;
        edges.push_back(e);
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty()) throw ParseError(lineno, "trailing content after edge list");
    }
    return Graph::from_edges(static_cast<VertexId>(n), std::move(edges));
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return load_graph(in);
}

}  // namespace lcalab
