#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "lcalab/errors.hpp"

namespace lcalab {

// All randomness in the project flows through these helpers so that runs are
// bit-reproducible across platforms: mt19937_64 has a standard-mandated output
// sequence, and the bounded samplers below avoid std::uniform_int_distribution,
// whose mapping is implementation-defined.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Decorrelated seed for stream `index` of a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (0x632BE59BD9B4E019ull * (index + 1));
    splitmix64(s);
    return splitmix64(s);
}

using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed) {
    std::uint64_t s = seed;
    return Engine(splitmix64(s));
}

// Uniform value in [0, bound) via masked rejection.
inline std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
    if (bound == 0) throw ParamError("uniform_below: bound must be positive");
    if ((bound & (bound - 1)) == 0) return eng() & (bound - 1);
    int bits = 64 - std::countl_zero(bound - 1);
    std::uint64_t mask = (bits == 64) ? ~0ull : ((1ull << bits) - 1);
    for (;;) {
        std::uint64_t x = eng() & mask;
        if (x < bound) return x;
    }
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real01(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle_in_place(std::vector<T>& v, Engine& eng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(eng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// 0..n-1 in uniformly random order.
inline std::vector<std::uint32_t> random_permutation(std::uint32_t n, Engine& eng) {
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    shuffle_in_place(perm, eng);
    return perm;
}

}  // namespace lcalab
