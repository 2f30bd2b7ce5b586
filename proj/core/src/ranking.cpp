#include "lcalab/ranking.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <string>

#include "lcalab/errors.hpp"
#include "lcalab/primes.hpp"
#include "lcalab/rng.hpp"

namespace lcalab {
namespace {

void check_params(VertexId n, std::uint32_t L, std::uint32_t k) {
    if (n < 1) throw ParamError("ranking: need n >= 1");
    if (L < 1 || L > n) throw ParamError("ranking: need 1 <= L <= n");
    if (k < 1 || k > n) throw ParamError("ranking: need 1 <= k <= n");
}

// Uniform field element via masked rejection on the splitmix64 stream.
std::uint64_t field_element(std::uint64_t& state, std::uint64_t p) {
    int bits = 64 - std::countl_zero(p - 1);
    std::uint64_t mask = (bits >= 64) ? ~0ull : ((1ull << bits) - 1);
    for (;;) {
        std::uint64_t x = splitmix64(state) & mask;
        if (x < p) return x;
    }
}

}  // namespace

std::uint64_t default_prime(VertexId n, std::uint32_t L) {
    std::uint64_t target = std::max<std::uint64_t>(
        {n, L, static_cast<std::uint64_t>(n) * L * 1024});
    return next_prime_at_least(target);
}

std::uint32_t default_L(VertexId n, double d) {
    auto base = static_cast<std::uint64_t>(std::ceil(d)) * 4;
    if (base < 1) base = 1;
    std::uint64_t L = std::bit_ceil(base);
    std::uint64_t cap = std::bit_floor(std::max<std::uint64_t>(1, n));
    return static_cast<std::uint32_t>(std::min(L, cap));
}

std::uint32_t default_k(VertexId n, double d) {
    double bits = n > 1 ? std::log2(static_cast<double>(n)) : 1.0;
    auto k = static_cast<std::uint64_t>(std::ceil(6.0 * d * bits));
    k = std::max<std::uint64_t>(1, k);
    return static_cast<std::uint32_t>(std::min<std::uint64_t>(k, std::max<VertexId>(1, n)));
}

RankingFunction RankingFunction::sample(VertexId n, std::uint32_t L, std::uint32_t k,
                                        std::uint64_t seed) {
    return sample(n, L, k, seed, default_prime(n, L));
}

RankingFunction RankingFunction::sample(VertexId n, std::uint32_t L, std::uint32_t k,
                                        std::uint64_t seed, std::uint64_t p) {
    check_params(n, L, k);
    if (p < std::max<std::uint64_t>(n, L) || !is_prime(p))
        throw ParamError("ranking: p must be a prime >= max(n, L)");
    RankingFunction rf;
    rf.n_ = n;
    rf.L_ = L;
    rf.k_ = k;
    rf.p_ = p;
    rf.seed_ = seed;
    std::uint64_t state = seed;
    rf.coeffs_.reserve(k);
    for (std::uint32_t i = 0; i < k; ++i) rf.coeffs_.push_back(field_element(state, p));
    return rf;
}

RankingFunction RankingFunction::with_coefficients(VertexId n, std::uint32_t L,
                                                   std::vector<std::uint64_t> coeffs,
                                                   std::uint64_t p) {
    check_params(n, L, static_cast<std::uint32_t>(coeffs.size()));
    if (p < std::max<std::uint64_t>(n, L) || !is_prime(p))
        throw ParamError("ranking: p must be a prime >= max(n, L)");
    for (std::uint64_t c : coeffs)
        if (c >= p) throw ParamError("ranking: coefficient out of field range");
    RankingFunction rf;
    rf.n_ = n;
    rf.L_ = L;
    rf.k_ = static_cast<std::uint32_t>(coeffs.size());
    rf.p_ = p;
    rf.seed_ = 0;
    rf.coeffs_ = std::move(coeffs);
    return rf;
}

std::uint32_t RankingFunction::level(VertexId v) const {
    if (v >= n_)
        throw ParamError("ranking: vertex id " + std::to_string(v) + " out of range");
    // Horner evaluation of the degree-(k-1) polynomial at x = v.
    std::uint64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = (mulmod(acc, v, p_) + *it) % p_;
    return static_cast<std::uint32_t>(1 + acc % L_);
}

std::uint32_t RankingFunction::seed_bits() const {
    auto bits_per_coeff = static_cast<std::uint32_t>(std::bit_width(p_ - 1));
    return k_ * bits_per_coeff;
}

nlohmann::ordered_json RankingFunction::to_json() const {
    std::ostringstream hex;
    hex << "0x" << std::hex << seed_;
    return nlohmann::ordered_json{
        {"n", n_}, {"L", L_}, {"k", k_}, {"seed_hex", hex.str()}, {"p", p_}};
}

RankingFunction RankingFunction::from_json(const nlohmann::json& j) {
    auto n = j.at("n").get<VertexId>();
    auto L = j.at("L").get<std::uint32_t>();
    auto k = j.at("k").get<std::uint32_t>();
    auto p = j.at("p").get<std::uint64_t>();
    auto hex = j.at("seed_hex").get<std::string>();
    std::uint64_t seed = std::stoull(hex, nullptr, 16);
    return sample(n, L, k, seed, p);
}

LevelBalanceReport level_balance_check(const RankingFunction& rf,
                                       const std::vector<VertexId>& ids) {
    LevelBalanceReport rep;
    rep.counts.assign(rf.L(), 0);
    rep.m = ids.size();
    for (VertexId v : ids) ++rep.counts[rf.level(v) - 1];
    if (rep.m > 0) {
        std::uint64_t worst = 0;
        for (std::uint64_t c : rep.counts) worst = std::max(worst, c);
        rep.max_ratio = static_cast<double>(worst) * rf.L() / static_cast<double>(rep.m);
    }
    return rep;
}

}  // namespace lcalab
