#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcalab/generator.hpp"
#include "lcalab/graph.hpp"

namespace lcalab::experiments {

// Neutral default master seed for generator/trial randomness; every trial
// derives its own stream from (master, index) so runs reproduce regardless of
// scheduling.
inline constexpr std::uint64_t kDefaultMasterSeed = 0x1CA1AB;

struct ExperimentReport {
    std::string name;
    nlohmann::ordered_json params;
    nlohmann::ordered_json metrics;
    bool pass = true;
    std::vector<std::string> notes;

    nlohmann::ordered_json to_json() const;
};

// ---- adaptive exposure ----

struct ExposureParams {
    GeneratorSpec graph;
    std::uint32_t s = 64;       // vertices exposed per trial
    std::uint32_t trials = 1000;
    double threshold = 6.0;     // edges incident to S may not exceed threshold*d*|S|
    std::uint64_t rng_seed = kDefaultMasterSeed;
};

// Exposes s vertices in BFS order from a random start (restarting if a
// component runs dry) and measures |edges incident to S| / (d*|S|).
ExperimentReport run_exposure(const ExposureParams& p);

// ---- vicinity scaling / moment sweep ----

struct ScalingParams {
    std::vector<std::uint32_t> n_grid = {1u << 10, 1u << 12, 1u << 14, 1u << 16};
    double d = 3.0;
    std::uint32_t graphs = 5;      // instances per grid point
    std::uint32_t seeds = 10;      // hash seeds per instance
    std::uint32_t centers = 2000;  // inquiries per hash seed
    std::uint64_t budget = 1'000'000;
    double tail_factor = 8.0;     // t_v above tail_factor*log2(n) counts as a tail event
    double tail_fraction_max = 1e-3;
    double ratio_bound = 16.0;    // cap for the fitted max-t_v-per-log2(n) coefficient
    double slope_max = 0.15;      // log-log slope bound for the moment verdicts
    std::uint64_t rng_seed = kDefaultMasterSeed;
};

struct ScalingAggregate {
    std::uint32_t n = 0;
    double log2n = 0;
    std::uint64_t inquiries = 0;
    std::uint64_t max_tv = 0;
    double mean_tv = 0;
    double mean_te = 0;
    double mean_te2 = 0;
    std::uint64_t tail_count = 0;
    std::uint64_t budget_exceeded = 0;
};

// One pass over the grid shared by the scaling and moment verdicts.
std::vector<ScalingAggregate> scaling_sweep(const ScalingParams& p);

// Verdicts: max t_v stays within tail_factor*log2(n), and the fraction of
// tail events per grid point stays below tail_fraction_max.
ExperimentReport run_scaling(const ScalingParams& p);
ExperimentReport run_scaling(const ScalingParams& p,
                             const std::vector<ScalingAggregate>& agg);

// Verdicts: log-log slopes of mean t_e and mean t_e^2 against n are below
// slope_max (flat-in-n growth).
ExperimentReport run_moments(const ScalingParams& p);
ExperimentReport run_moments(const ScalingParams& p,
                             const std::vector<ScalingAggregate>& agg);

// ---- tree lower bound (full random order) ----

struct TightnessParams {
    std::uint32_t d = 2;
    std::uint32_t depth = 1;
    std::uint64_t trials = 100'000;
    double mean_rel_tol = 0.02;   // applied to the exact expectation at d=2, depth=1
    double level_rel_tol = 0.10;  // per-level means vs d^l/l!
    std::uint64_t rng_seed = kDefaultMasterSeed;
};

// Measures the root's vicinity on a complete d-ary tree under uniformly
// random arrival orders (Fisher-Yates, not the hash family). Reports the mean
// size and per-level counts of vertices whose parent is a member, whose
// expectation is d^l/l!.
ExperimentReport run_tightness(const TightnessParams& p);

// ---- exact dominance checks ----

// Exact big-rational dominance checks at one (n, d) plus the dependent-sum
// comparison with its negative control.
ExperimentReport run_dominance(std::uint32_t n, std::uint32_t d);

// ---- monotone level-sequence combinatorics ----

struct LegalPathParams {
    std::uint32_t L = 3;
    std::uint32_t t = 2;
    std::uint32_t enum_L_max = 5;   // closed-form vs brute force sweep
    std::uint32_t enum_t_max = 6;
    std::uint32_t bound_max = 64;   // analytic upper bound sweep, L and t
};

ExperimentReport run_legal_paths(const LegalPathParams& p);

// ---- level balance ----

struct LevelBalanceParams {
    std::uint32_t n = 1u << 14;
    double d = 3.0;
    std::uint32_t L = 16;
    std::uint32_t k = 1024;
    std::uint32_t seeds = 1000;
    // Accumulation target for hashed vertices. 0 = 2.5 * L * log2(n): the 2x
    // load bound is a Chernoff-regime statement, and right at the L*log2(n)
    // floor the exact multinomial tail alone exceeds one in a thousand, so
    // the default runs well past the floor (k leaves room above it).
    std::uint32_t min_m = 0;
    double ratio_threshold = 2.0;
    double exceed_fraction_max = 1e-3;
    std::uint64_t budget = 1'000'000;
    std::uint64_t rng_seed = kDefaultMasterSeed;
};

// Per hash seed, accumulates the distinct vertices touched by vicinity
// explorations until at least min_m are hashed, then checks the max
// level-load ratio against ratio_threshold.
ExperimentReport run_level_balance(const LevelBalanceParams& p);

// ---- vicinity statistics ----

struct StatsParams {
    double d = 0;             // display value echoed into records
    std::uint32_t L = 0;      // 0 = default from (n, d)
    std::uint32_t k = 0;      // 0 = default from (n, d)
    std::uint32_t seeds = 5;
    std::uint32_t centers = 200;
    std::uint64_t budget = 1'000'000;
    std::uint64_t rng_seed = kDefaultMasterSeed;
};

struct StatsRecord {
    std::uint32_t seed_index = 0;
    VertexId center = 0;
    std::uint64_t t_v = 0;
    std::uint64_t t_e = 0;
    std::uint64_t queries = 0;
    bool budget_exceeded = false;
};

// Samples seeds x centers vicinity explorations; aggregates mean/max and
// p50/p90/p99 quantiles of t_v, t_e and the second moment of t_e. Raw
// records are appended to *records when given.
ExperimentReport vicinity_stats(const Graph& g, const StatsParams& p,
                                std::vector<StatsRecord>* records = nullptr);

}  // namespace lcalab::experiments
