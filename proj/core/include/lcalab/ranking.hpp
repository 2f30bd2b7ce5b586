#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcalab/graph.hpp"

namespace lcalab {

// Rank of a vertex: (level, id), compared lexicographically. Smaller rank
// means earlier arrival; ids break level ties, so all ranks are distinct.
struct Rank {
    std::uint32_t level;  // 1..L
    VertexId id;
    auto operator<=>(const Rank&) const = default;
};

// Member of the seeded hash family h: [n] -> [L]. The level of v is
// 1 + (poly(v) mod p) mod L where poly is a degree-(k-1) polynomial over the
// prime field F_p with coefficients derived deterministically from the seed.
// The induced ordering processes vertices by increasing (level, id).
class RankingFunction {
  public:
    static RankingFunction sample(VertexId n, std::uint32_t L, std::uint32_t k,
                                  std::uint64_t seed);
    // Explicit field modulus; p must be prime and >= max(n, L).
    static RankingFunction sample(VertexId n, std::uint32_t L, std::uint32_t k,
                                  std::uint64_t seed, std::uint64_t p);
    // Fixed coefficient vector; for exhaustive small-field analysis.
    static RankingFunction with_coefficients(VertexId n, std::uint32_t L,
                                             std::vector<std::uint64_t> coeffs,
                                             std::uint64_t p);

    std::uint32_t level(VertexId v) const;
    Rank rank(VertexId v) const { return {level(v), v}; }
    bool precedes(VertexId u, VertexId v) const { return rank(u) < rank(v); }

    VertexId n() const { return n_; }
    std::uint32_t L() const { return L_; }
    std::uint32_t k() const { return k_; }
    std::uint64_t p() const { return p_; }
    std::uint64_t seed() const { return seed_; }
    std::uint32_t seed_bits() const;  // k * ceil(log2 p)

    // {n, L, k, seed_hex, p}; from_json re-derives the coefficients.
    nlohmann::ordered_json to_json() const;
    static RankingFunction from_json(const nlohmann::json& j);

  private:
    VertexId n_ = 0;
    std::uint32_t L_ = 1;
    std::uint32_t k_ = 1;
    std::uint64_t p_ = 2;
    std::uint64_t seed_ = 0;
    std::vector<std::uint64_t> coeffs_;
};

// Default modulus: smallest prime >= max(n, L, 1024*n*L), so the bias of the
// mod-L range reduction (at most L/p per value) is negligible.
std::uint64_t default_prime(VertexId n, std::uint32_t L);

// Default range: 4*ceil(d) rounded up to a power of two, clamped to [1, n]
// (kept a power of two when clamped).
std::uint32_t default_L(VertexId n, double d);
// Default independence: ceil(6*d*log2(n)), clamped to [1, n].
std::uint32_t default_k(VertexId n, double d);

struct LevelBalanceReport {
    std::vector<std::uint64_t> counts;  // per level 1..L at index level-1
    std::uint64_t m = 0;
    double max_ratio = 0.0;  // max_l counts[l] / (m / L)
};

// Level histogram of `ids` (distinct) under rf, and the worst ratio against
// the uniform per-level expectation m/L.
LevelBalanceReport level_balance_check(const RankingFunction& rf,
                                       const std::vector<VertexId>& ids);

}  // namespace lcalab
