#pragma once

#include "kspread/graph.hpp"

namespace kspread {

struct SimConfig {
    double beta = 0.09;              // per-contact adoption probability
    std::uint32_t realizations = 100;
    std::uint64_t master_seed = 0;
    std::uint32_t max_steps = 0;     // safety bound; 0 means node_count
};

struct SimResult {
    std::uint64_t informed_count = 0;
    double coverage = 0.0;           // informed_count / N
    std::uint32_t steps_taken = 0;   // rounds in which at least one contact attempt happened
};

struct AggregateResult {
    double mean_coverage = 0.0;
    double std_dev = 0.0;                  // sample standard deviation
    std::vector<double> coverages;         // per realization, indexed by realization
    std::vector<std::uint32_t> steps;      // per realization
};

/// SplitMix64 mixing of (master seed, realization index). Every realization's
/// mt19937_64 stream is seeded with this value, so realizations are
/// independent and the aggregate is reproducible regardless of thread count.
std::uint64_t realization_seed(std::uint64_t master_seed, std::uint64_t index);

/// One synchronous-round run of the uninformed/informed dynamics. Seeds start
/// informed and active; every active node makes one Bernoulli(beta) attempt
/// per uninformed neighbor; nodes informed this round are active exactly the
/// next round; the run ends when no node is active. Deterministic for a fixed
/// rng_seed.
SimResult simulate_once(const Graph& g, std::span<const NodeId> seeds,
                        double beta, std::uint64_t rng_seed,
                        std::uint32_t max_steps = 0);

/// cfg.realizations independent runs with per-realization derived seeds,
/// executed in parallel, aggregated in realization order.
AggregateResult simulate_mean(const Graph& g, std::span<const NodeId> seeds,
                              const SimConfig& cfg);

} // namespace kspread
