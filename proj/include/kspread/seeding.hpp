#pragma once

#include "kspread/centrality.hpp"
#include "kspread/decompose.hpp"
#include "kspread/graph.hpp"

namespace kspread {

enum class SeedAlgo {
    degree,
    eigenvector,
    pagerank,
    kshell,
    ks_proportional,
    ks_half_proportional,
};

inline constexpr SeedAlgo kAllSeedAlgos[] = {
    SeedAlgo::degree,        SeedAlgo::eigenvector,      SeedAlgo::pagerank,
    SeedAlgo::kshell,        SeedAlgo::ks_proportional,  SeedAlgo::ks_half_proportional,
};

/// Display names: Dg, Eg, Pr, Kshell, Ks-P, Ks-Hp.
const char* seed_algo_name(SeedAlgo a);
/// CLI spellings: dg, eg, pr, kshell, ks-p, ks-hp.
std::optional<SeedAlgo> seed_algo_from_string(std::string_view s);

/// One audit row of a proportional allocation: how many seeds a shell was
/// apportioned and how many were actually taken from it.
struct ShellQuota {
    std::uint32_t shell = 0;
    std::uint64_t quota = 0;
    std::uint64_t selected = 0;
};

struct SeedSet {
    SeedAlgo algorithm = SeedAlgo::degree;
    std::uint64_t n_requested = 0;
    std::vector<NodeId> members;                 // distinct, selection order
    std::vector<ShellQuota> allocation_trace;    // Ks-P / Ks-Hp only
    bool truncated = false;                      // n_requested exceeded N
};

/// Largest-remainder apportionment of n seeds over shell populations given
/// innermost-first. Floors first, then one seat per remaining seed in
/// descending fractional-remainder order (ties innermost-first); a quota can
/// never exceed its shell population — any surplus is re-apportioned over the
/// shells that still have room until all seeds are placed. The quotas sum to
/// min(n, total population).
std::vector<std::uint64_t> allocate_proportional(
    std::span<const std::pair<std::uint32_t, std::uint64_t>> populations,
    std::uint64_t n);

/// Top n nodes by score; ties broken by higher degree, then lower id. When
/// n exceeds the node count all nodes are returned and truncated is set.
SeedSet select_top_by_score(const ScoreVector& scores, const Graph& g,
                            std::uint64_t n);

/// Plain k-shell ranking: shell index descending, degree descending, id
/// ascending. The comparison baseline.
SeedSet select_kshell_baseline(const ShellAssignment& sa, const Graph& g,
                               std::uint64_t n);

/// k-shell proportional: quotas over all non-empty shells by largest-remainder
/// apportionment (innermost first), the top-degree nodes within each shell.
SeedSet select_ks_p(const ShellAssignment& sa, const Graph& g, std::uint64_t n);

/// k-shell half proportional: ceil(n/2) top-degree core nodes first (the whole
/// core plus a bigger second half when the core is smaller than that), the
/// remainder via the proportional rule over the not-yet-selected nodes.
SeedSet select_ks_hp(const ShellAssignment& sa, const Graph& g, std::uint64_t n);

/// Dispatcher that computes whatever inputs the algorithm needs.
SeedSet select_seeds(SeedAlgo algo, const Graph& g, std::uint64_t n);

} // namespace kspread
