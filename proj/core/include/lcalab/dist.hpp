#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcalab/legal_paths.hpp"  // BigInt / BigRat

namespace lcalab {

// A binomial distribution shifted by an integer offset: offset + B(trials, prob).
// Support is {offset, ..., offset + trials}.
struct DistSpec {
    std::uint64_t trials = 0;
    BigRat prob = 0;
    std::int64_t offset = 0;

    void validate() const;  // throws ParamError unless 0 <= prob <= 1
};

BigRat binomial_pmf(std::uint64_t trials, const BigRat& p, std::uint64_t i);

// Exact Pr[X <= x].
BigRat binomial_cdf(const DistSpec& spec, std::int64_t x);
// Exact Pr[X > x].
BigRat tail_gt(const DistSpec& spec, std::int64_t x);

// True iff Pr[X > t] <= Pr[Z > t] for every integer t (first-order
// stochastic dominance), decided exactly over the union of supports.
bool stochastically_dominated(const DistSpec& x, const DistSpec& z);

// Dense distribution on a finite integer support, for joint/convolved laws.
using RatDist = std::map<std::int64_t, BigRat>;

RatDist dist_from_spec(const DistSpec& spec);
RatDist convolve(const RatDist& a, const RatDist& b);
bool stochastically_dominated(const RatDist& x, const RatDist& z);

// Checks, for the given n and d with every alpha in [d, n]:
//   B(alpha, d/alpha)  dominated by  2d + B(n^2, 2d/n^2),
// plus the two facts the chain rests on: for alpha > 2d,
//   B(1, d/alpha)  dominated by  B(ceil(n^2/alpha), 2d/n^2)
// (via Pr[Y = 0] <= Pr[X = 0]), and (alpha-1)*ceil(n^2/alpha) <= n^2.
// Requires 2d <= n^2 so the wide binomial's probability stays valid.
struct DominanceReport {
    bool ok = true;
    std::vector<std::string> failures;
};
DominanceReport verify_binomial_shift_dominance(std::uint32_t n, std::uint32_t d);

// Exhaustive check of the dependent-sum dominance rule on a fixed pair of
// two-step cases. Positive case: X1 ~ Bern(1/4), X2 | X1 ~ Bern(1/4 + X1/8),
// against independent Y1, Y2 ~ Bern(1/2); the sum must be dominated. Negative
// control: Y2 ~ Bern(1/8) breaks the per-step condition and the sum
// comparison must detect it.
struct SumDominanceReport {
    bool positive_holds = false;
    bool negative_detected = false;
    bool ok = false;
    std::vector<std::string> notes;
};
SumDominanceReport verify_conditional_sum_dominance();

}  // namespace lcalab
