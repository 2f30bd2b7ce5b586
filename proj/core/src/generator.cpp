#include "lcalab/generator.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "lcalab/errors.hpp"
#include "lcalab/rng.hpp"

namespace lcalab {
namespace {

constexpr int kRegularRetries = 100;
constexpr std::uint64_t kMaxTreeVertices = 100'000'000;

bool is_integral(double d) { return d == std::floor(d) && d >= 0; }

Graph gen_regular(const GeneratorSpec& spec, Engine& eng) {
    auto d = static_cast<std::uint64_t>(spec.d);
    if (static_cast<std::uint64_t>(spec.n) * d % 2 != 0)
        throw ParamError("regular: n*d must be even");
    if (d >= spec.n && !(d == 0 && spec.n == 0))
        throw ParamError("regular: need 0 <= d < n");
    if (d == 0) return Graph::from_edges(spec.n, {});

    std::vector<VertexId> stubs;
    stubs.reserve(spec.n * d);
    for (VertexId v = 0; v < spec.n; ++v)
        for (std::uint64_t i = 0; i < d; ++i) stubs.push_back(v);

    for (int attempt = 0; attempt < kRegularRetries; ++attempt) {
        shuffle_in_place(stubs, eng);
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        bool ok = true;
        for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
            VertexId u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            else edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return Graph::from_edges(spec.n, std::move(edges));
    }
    throw GenerationError("regular: no simple pairing found in " +
                          std::to_string(kRegularRetries) + " attempts");
}

Graph gen_gnp(const GeneratorSpec& spec, Engine& eng) {
    VertexId n = spec.n;
    if (n < 2) return Graph::from_edges(n, {});
    double p = spec.d / (n - 1);
    std::vector<Edge> edges;
    if (p >= 1.0) {
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(n, std::move(edges));
    }
    if (p <= 0.0) return Graph::from_edges(n, {});

    // Geometric skips between successful pairs; visits only the sampled edges.
    double logq = std::log1p(-p);
    std::int64_t v = 1, w = -1;
    while (v < static_cast<std::int64_t>(n)) {
        double r = uniform_real01(eng);
        w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / logq));
        while (w >= v && v < static_cast<std::int64_t>(n)) {
            w -= v;
            ++v;
        }
        if (v < static_cast<std::int64_t>(n))
            edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(v));
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_bipartite(const GeneratorSpec& spec, Engine& eng) {
    auto d = static_cast<std::uint64_t>(spec.d);
    std::vector<Edge> edges;
    edges.reserve(spec.n * d);
    std::vector<VertexId> chosen;
    for (VertexId c = 0; c < spec.n; ++c) {
        chosen.clear();
        std::unordered_set<VertexId> seen;
        while (chosen.size() < d) {
            auto prod = static_cast<VertexId>(uniform_below(eng, spec.m));
            if (seen.insert(prod).second) chosen.push_back(prod);
        }
        for (VertexId prod : chosen) edges.emplace_back(c, spec.n + prod);
    }
    return Graph::from_edges(spec.n + spec.m, std::move(edges));
}

Graph gen_tree(const GeneratorSpec& spec) {
    auto d = static_cast<std::uint64_t>(spec.d);
    std::uint64_t total = dary_tree_size(static_cast<std::uint32_t>(d), spec.depth);
    auto n = static_cast<VertexId>(total);
    std::vector<Edge> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (std::uint64_t parent = 0; parent < total; ++parent) {
        for (std::uint64_t c = 1; c <= d; ++c) {
            std::uint64_t child = parent * d + c;
            if (child >= total) break;
            edges.emplace_back(static_cast<VertexId>(parent),
                               static_cast<VertexId>(child));
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace

std::uint64_t dary_tree_size(std::uint32_t d, std::uint32_t depth) {
    std::uint64_t total = 1, layer = 1;
    for (std::uint32_t i = 0; i < depth; ++i) {
        layer *= d;
        total += layer;
        if (total > kMaxTreeVertices)
            throw ParamError("tree: vertex count exceeds " +
                             std::to_string(kMaxTreeVertices));
    }
    return total;
}

GraphModel graph_model_from_string(const std::string& s) {
    if (s == "regular") return GraphModel::regular;
    if (s == "gnp") return GraphModel::gnp;
    if (s == "bipartite") return GraphModel::bipartite;
    if (s == "tree") return GraphModel::tree;
    throw ParamError("unknown graph model '" + s + "'");
}

std::string to_string(GraphModel m) {
    switch (m) {
        case GraphModel::regular: return "regular";
        case GraphModel::gnp: return "gnp";
        case GraphModel::bipartite: return "bipartite";
        case GraphModel::tree: return "tree";
    }
    return "?";
}

void GeneratorSpec::validate() const {
    switch (model) {
        case GraphModel::regular:
            if (!is_integral(d)) throw ParamError("regular: d must be a non-negative integer");
            if (d >= n && !(d == 0 && n == 0)) throw ParamError("regular: need 0 <= d < n");
            if (static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(d) % 2 != 0)
                throw ParamError("regular: n*d must be even");
            break;
        case GraphModel::gnp:
            if (d < 0) throw ParamError("gnp: d must be non-negative");
            if (n >= 1 && d > n - 1) throw ParamError("gnp: need d <= n-1");
            break;
        case GraphModel::bipartite:
            if (!is_integral(d)) throw ParamError("bipartite: d must be a non-negative integer");
            if (m == 0) throw ParamError("bipartite: need m >= 1 producers");
            if (d > m) throw ParamError("bipartite: need d <= m");
            break;
        case GraphModel::tree:
            if (!is_integral(d) || d < 1) throw ParamError("tree: d must be a positive integer");
            dary_tree_size(static_cast<std::uint32_t>(d), depth);  // size guard
            break;
    }
}

Graph generate(const GeneratorSpec& spec) {
    spec.validate();
    Engine eng = make_engine(spec.rng_seed);
    switch (spec.model) {
        case GraphModel::regular: return gen_regular(spec, eng);
        case GraphModel::gnp: return gen_gnp(spec, eng);
        case GraphModel::bipartite: return gen_bipartite(spec, eng);
        case GraphModel::tree: return gen_tree(spec);
    }
    throw ParamError("unknown graph model");
}

}  // namespace lcalab
