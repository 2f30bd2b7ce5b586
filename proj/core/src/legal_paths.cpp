#include "lcalab/legal_paths.hpp"

#include <vector>

#include "lcalab/errors.hpp"

namespace lcalab {

BigInt binomial_coeff(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt count_legal_sequences(std::uint64_t L, std::uint64_t t) {
    if (L < 1) throw ParamError("count_legal_sequences: need L >= 1");
    return binomial_coeff(t + L - 1, t);
}

BigInt count_compositions(std::uint64_t L, std::uint64_t t) {
    return binomial_coeff(t + L, t);
}

BigRat legal_path_probability(std::uint64_t L, std::uint64_t t) {
    if (L < 1) throw ParamError("legal_path_probability: need L >= 1");
    BigInt denom = 1;
    for (std::uint64_t i = 0; i < t; ++i) denom *= L;
    return BigRat(count_legal_sequences(L, t), denom);
}

bool legal_probability_bound_holds(std::uint64_t L, std::uint64_t t) {
    if (L < 1 || t < 1)
        throw ParamError("legal_probability_bound_holds: need L >= 1, t >= 1");
    // e > 2718281828459045 / 10^15, so (e_lo*(t+L)/(L*t))^t lower-bounds the
    // right side and proving lhs <= lower bound proves the inequality.
    const BigInt e_lo_num = 2718281828459045ll;
    const BigInt e_lo_den = 1000000000000000ll;
    BigRat base(e_lo_num * (t + L), e_lo_den * L * t);
    BigRat rhs = 1;
    for (std::uint64_t i = 0; i < t; ++i) rhs *= base;
    return legal_path_probability(L, t) <= rhs;
}

BigInt enumerate_legal_sequences(std::uint64_t L, std::uint64_t t) {
    if (L < 1) throw ParamError("enumerate_legal_sequences: need L >= 1");
    if (t == 0) return 1;
    std::vector<std::uint64_t> tuple(t, 1);  // odometer over {1..L}^t
    BigInt count = 0;
    for (;;) {
        bool legal = true;
        for (std::uint64_t i = 1; i < t && legal; ++i)
            if (tuple[i] < tuple[i - 1]) legal = false;
        if (legal) ++count;
        std::uint64_t pos = 0;
        while (pos < t && tuple[pos] == L) {
            tuple[pos] = 1;
            ++pos;
        }
        if (pos == t) break;
        ++tuple[pos];
    }
    return count;
}

}  // namespace lcalab
