#include "lcalab/dist.hpp"

#include <algorithm>

#include "lcalab/errors.hpp"

namespace lcalab {

void DistSpec::validate() const {
    if (prob < 0 || prob > 1)
        throw ParamError("distribution: probability out of [0, 1]");
}

BigRat binomial_pmf(std::uint64_t trials, const BigRat& p, std::uint64_t i) {
    if (i > trials) return 0;
    BigRat q = 1 - p;
    BigRat result(binomial_coeff(trials, i));
    for (std::uint64_t j = 0; j < i; ++j) result *= p;
    for (std::uint64_t j = 0; j < trials - i; ++j) result *= q;
    return result;
}

BigRat binomial_cdf(const DistSpec& spec, std::int64_t x) {
    spec.validate();
    if (x < spec.offset) return 0;
    auto cap = static_cast<std::uint64_t>(
        std::min<std::int64_t>(x - spec.offset, static_cast<std::int64_t>(spec.trials)));
    // Incremental pmf: term(i+1) = term(i) * (n-i)/(i+1) * p/q.
    BigRat q = 1 - spec.prob;
    if (spec.prob == 0) return 1;
    if (q == 0) return cap >= spec.trials ? BigRat(1) : BigRat(0);
    BigRat term = 1;
    for (std::uint64_t j = 0; j < spec.trials; ++j) term *= q;
    BigRat sum = term;
    BigRat ratio = spec.prob / q;
    for (std::uint64_t i = 0; i < cap; ++i) {
        term *= ratio;
        term *= BigRat(spec.trials - i, i + 1);
        sum += term;
    }
    return sum;
}

BigRat tail_gt(const DistSpec& spec, std::int64_t x) { return 1 - binomial_cdf(spec, x); }

bool stochastically_dominated(const DistSpec& x, const DistSpec& z) {
    x.validate();
    z.validate();
    std::int64_t lo = std::min(x.offset, z.offset);
    std::int64_t hi = std::max(x.offset + static_cast<std::int64_t>(x.trials),
                               z.offset + static_cast<std::int64_t>(z.trials));
    // Tails are monotone and agree trivially outside [lo, hi).
    BigRat tx = 1, tz = 1;
    RatDist px = dist_from_spec(x), pz = dist_from_spec(z);
    for (std::int64_t t = lo; t < hi; ++t) {
        auto ix = px.find(t);
        if (ix != px.end()) tx -= ix->second;
        auto iz = pz.find(t);
        if (iz != pz.end()) tz -= iz->second;
        if (tx > tz) return false;
    }
    return true;
}

RatDist dist_from_spec(const DistSpec& spec) {
    spec.validate();
    RatDist d;
    BigRat q = 1 - spec.prob;
    if (spec.prob == 0) {
        d[spec.offset] = 1;
        return d;
    }
    if (q == 0) {
        d[spec.offset + static_cast<std::int64_t>(spec.trials)] = 1;
        return d;
    }
    BigRat term = 1;
    for (std::uint64_t j = 0; j < spec.trials; ++j) term *= q;
    BigRat ratio = spec.prob / q;
    d[spec.offset] = term;
    for (std::uint64_t i = 0; i < spec.trials; ++i) {
        term *= ratio;
        term *= BigRat(spec.trials - i, i + 1);
        d[spec.offset + static_cast<std::int64_t>(i) + 1] = term;
    }
    return d;
}

RatDist convolve(const RatDist& a, const RatDist& b) {
    RatDist out;
    for (const auto& [va, pa] : a)
        for (const auto& [vb, pb] : b) out[va + vb] += pa * pb;
    return out;
}

bool stochastically_dominated(const RatDist& x, const RatDist& z) {
    std::vector<std::int64_t> points;
    for (const auto& [v, _] : x) points.push_back(v);
    for (const auto& [v, _] : z) points.push_back(v);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    BigRat tx = 1, tz = 1;
    for (std::int64_t t : points) {
        auto ix = x.find(t);
        if (ix != x.end()) tx -= ix->second;
        auto iz = z.find(t);
        if (iz != z.end()) tz -= iz->second;
        if (tx > tz) return false;
    }
    return true;
}

DominanceReport verify_binomial_shift_dominance(std::uint32_t n, std::uint32_t d) {
    DominanceReport rep;
    if (d < 1 || d > n) throw ParamError("dominance check: need 1 <= d <= n");
    auto n2 = static_cast<std::uint64_t>(n) * n;
    if (2 * static_cast<std::uint64_t>(d) > n2)
        throw ParamError("dominance check: need 2d <= n^2");

    DistSpec wide{n2, BigRat(2 * static_cast<std::uint64_t>(d), n2),
                  2 * static_cast<std::int64_t>(d)};
    for (std::uint32_t alpha = d; alpha <= n; ++alpha) {
        DistSpec narrow{alpha, BigRat(d, alpha), 0};
        if (!stochastically_dominated(narrow, wide)) {
            rep.ok = false;
            rep.failures.push_back("alpha=" + std::to_string(alpha) +
                                   ": narrow binomial not dominated");
        }
        std::uint64_t ceil_frac = (n2 + alpha - 1) / alpha;
        if (alpha > 2 * d) {
            // Single-trial step: it suffices that Pr[Y=0] <= Pr[X=0].
            DistSpec bern{1, BigRat(d, alpha), 0};
            DistSpec chunk{ceil_frac, BigRat(2 * static_cast<std::uint64_t>(d), n2), 0};
            BigRat y0 = binomial_cdf(chunk, 0);
            BigRat x0 = binomial_cdf(bern, 0);
            if (!(y0 <= x0)) {
                rep.ok = false;
                rep.failures.push_back("alpha=" + std::to_string(alpha) +
                                       ": Pr[Y=0] > Pr[X=0]");
            }
            if (!stochastically_dominated(bern, chunk)) {
                rep.ok = false;
                rep.failures.push_back("alpha=" + std::to_string(alpha) +
                                       ": single-trial step fails");
            }
        }
        if (static_cast<std::uint64_t>(alpha - 1) * ceil_frac > n2) {
            rep.ok = false;
            rep.failures.push_back("alpha=" + std::to_string(alpha) +
                                   ": (alpha-1)*ceil(n^2/alpha) > n^2");
        }
    }
    return rep;
}

SumDominanceReport verify_conditional_sum_dominance() {
    SumDominanceReport rep;

    // Dependent pair: X1 ~ Bern(1/4); X2 given X1=x ~ Bern(1/4 + x/8).
    auto bern = [](const BigRat& p) {
        RatDist d;
        d[0] = 1 - p;
        d[1] = p;
        return d;
    };
    RatDist x_sum;
    {
        BigRat p1(1, 4);
        for (int x1 : {0, 1}) {
            BigRat px1 = x1 ? p1 : 1 - p1;
            BigRat p2 = BigRat(1, 4) + BigRat(x1, 8);
            for (int x2 : {0, 1}) {
                BigRat px2 = x2 ? p2 : 1 - p2;
                x_sum[x1 + x2] += px1 * px2;
            }
        }
    }

    RatDist y_sum = convolve(bern(BigRat(1, 2)), bern(BigRat(1, 2)));
    rep.positive_holds = stochastically_dominated(x_sum, y_sum);
    if (!rep.positive_holds) rep.notes.push_back("positive case unexpectedly fails");

    RatDist y_weak = convolve(bern(BigRat(1, 2)), bern(BigRat(1, 8)));
    bool weak_holds = stochastically_dominated(x_sum, y_weak);
    rep.negative_detected = !weak_holds;
    if (weak_holds) rep.notes.push_back("negative control not detected");

    rep.ok = rep.positive_holds && rep.negative_detected;
    return rep;
}

}  // namespace lcalab
