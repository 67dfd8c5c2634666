#include "kspread/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace kspread {

std::uint64_t realization_seed(std::uint64_t master_seed, std::uint64_t index) {
    // splitmix64 of master_seed advanced (index + 1) times along the gamma
    std::uint64_t z = master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void validate(const Graph& g, std::span<const NodeId> seeds, double beta) {
    if (seeds.empty()) {
        throw std::invalid_argument("simulate: seed set must not be empty");
    }
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw std::invalid_argument("simulate: beta must be in [0, 1]");
    }
    for (NodeId s : seeds) {
        if (s >= g.node_count()) {
            throw std::invalid_argument("simulate: seed id out of range");
        }
    }
}

} // namespace

SimResult simulate_once(const Graph& g, std::span<const NodeId> seeds,
                        double beta, std::uint64_t rng_seed,
                        std::uint32_t max_steps) {
    validate(g, seeds, beta);
    const std::size_t n = g.node_count();

    std::vector<std::uint8_t> informed(n, 0);
    std::vector<NodeId> active;
    active.reserve(seeds.size());
    for (NodeId s : seeds) {
        if (!informed[s]) {
            informed[s] = 1;
            active.push_back(s);
        }
    }
    std::uint64_t informed_count = active.size();

    std::mt19937_64 rng(rng_seed);
    const std::uint32_t bound =
        max_steps > 0 ? max_steps : static_cast<std::uint32_t>(n);
    std::uint32_t steps = 0;
    std::vector<NodeId> next;
    for (std::uint32_t round = 0; round < bound && !active.empty(); ++round) {
        next.clear();
        bool attempted = false;
        for (NodeId a : active) {
            for (NodeId nb : g.neighbors(a)) {
                if (informed[nb]) continue; // one success is enough; later attempts are moot
                attempted = true;
                if (uniform01(rng) < beta) {
                    informed[nb] = 1;
                    next.push_back(nb);
                }
            }
        }
        if (attempted) ++steps;
        informed_count += next.size();
        active.swap(next);
    }

    SimResult r;
    r.informed_count = informed_count;
    r.coverage = static_cast<double>(informed_count) / static_cast<double>(n);
    r.steps_taken = steps;
    return r;
}

AggregateResult simulate_mean(const Graph& g, std::span<const NodeId> seeds,
                              const SimConfig& cfg) {
    validate(g, seeds, cfg.beta);
    if (cfg.realizations < 1) {
        throw std::invalid_argument("simulate_mean: realizations must be >= 1");
    }

    const std::uint32_t runs = cfg.realizations;
    AggregateResult agg;
    agg.coverages.resize(runs);
    agg.steps.resize(runs);

    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = std::min<unsigned>(std::max(hw, 1u), runs);
    auto work = [&](unsigned worker) {
        for (std::uint32_t r = worker; r < runs; r += workers) {
            SimResult res = simulate_once(g, seeds, cfg.beta,
                                          realization_seed(cfg.master_seed, r),
                                          cfg.max_steps);
            agg.coverages[r] = res.coverage;
            agg.steps[r] = res.steps_taken;
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    // deterministic Welford reduction in realization order (exact for the
    // degenerate all-equal case, e.g. beta = 1)
    double mean = 0.0, m2 = 0.0;
    for (std::uint32_t r = 0; r < runs; ++r) {
        double d = agg.coverages[r] - mean;
        mean += d / (r + 1);
        m2 += d * (agg.coverages[r] - mean);
    }
    agg.mean_coverage = mean;
    agg.std_dev = runs > 1 ? std::sqrt(m2 / (runs - 1)) : 0.0;
    return agg;
}

} // namespace kspread
