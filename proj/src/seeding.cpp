#include "kspread/seeding.hpp"

#include <algorithm>
#include <numeric>

namespace kspread {

const char* seed_algo_name(SeedAlgo a) {
    switch (a) {
        case SeedAlgo::degree: return "Dg";
        case SeedAlgo::eigenvector: return "Eg";
        case SeedAlgo::pagerank: return "Pr";
        case SeedAlgo::kshell: return "Kshell";
        case SeedAlgo::ks_proportional: return "Ks-P";
        case SeedAlgo::ks_half_proportional: return "Ks-Hp";
    }
    return "?";
}

std::optional<SeedAlgo> seed_algo_from_string(std::string_view s) {
    if (s == "dg") return SeedAlgo::degree;
    if (s == "eg") return SeedAlgo::eigenvector;
    if (s == "pr") return SeedAlgo::pagerank;
    if (s == "kshell") return SeedAlgo::kshell;
    if (s == "ks-p") return SeedAlgo::ks_proportional;
    if (s == "ks-hp") return SeedAlgo::ks_half_proportional;
    return std::nullopt;
}

std::vector<std::uint64_t> allocate_proportional(
    std::span<const std::pair<std::uint32_t, std::uint64_t>> populations,
    std::uint64_t n) {
    const std::size_t k = populations.size();
    std::uint64_t total = 0;
    for (const auto& [shell, pop] : populations) total += pop;
    if (total == 0 && n > 0) {
        throw std::invalid_argument("allocate_proportional: no population to draw from");
    }

    std::vector<std::uint64_t> quota(k, 0);
    std::vector<std::uint64_t> capacity(k);
    for (std::size_t i = 0; i < k; ++i) capacity[i] = populations[i].second;

    std::uint64_t remaining = std::min(n, total);
    std::vector<std::uint64_t> alloc(k), frac(k);
    std::vector<std::size_t> order(k);
    while (remaining > 0) {
        std::uint64_t cap_total = std::accumulate(capacity.begin(), capacity.end(), std::uint64_t{0});
        std::uint64_t floors = 0;
        for (std::size_t i = 0; i < k; ++i) {
            // exact integer floor/remainder of remaining * capacity / cap_total
            unsigned __int128 prod =
                static_cast<unsigned __int128>(remaining) * capacity[i];
            alloc[i] = static_cast<std::uint64_t>(prod / cap_total);
            frac[i] = static_cast<std::uint64_t>(prod % cap_total);
            floors += alloc[i];
        }
        std::uint64_t seats = remaining - floors;
        std::iota(order.begin(), order.end(), std::size_t{0});
        // descending fractional remainder; stable keeps innermost-first on ties
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
        for (std::size_t r = 0; r < k && seats > 0; ++r) {
            std::size_t i = order[r];
            if (alloc[i] < capacity[i]) {
                ++alloc[i];
                --seats;
            }
        }
        for (std::size_t i = 0; i < k; ++i) {
            std::uint64_t take = std::min(alloc[i], capacity[i]);
            quota[i] += take;
            capacity[i] -= take;
            remaining -= take;
        }
    }
    return quota;
}

namespace {

// Members of one shell ordered for picking: degree descending, id ascending.
std::vector<NodeId> by_degree(const std::vector<NodeId>& members, const Graph& g) {
    std::vector<NodeId> sorted = members;
    std::stable_sort(sorted.begin(), sorted.end(), [&](NodeId a, NodeId b) {
        return g.degree(a) > g.degree(b);
    });
    return sorted;
}

SeedSet make_empty(SeedAlgo algo, std::uint64_t n) {
    SeedSet s;
    s.algorithm = algo;
    s.n_requested = n;
    s.truncated = n > 0;
    return s;
}

void require_positive(std::uint64_t n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

} // namespace

SeedSet select_top_by_score(const ScoreVector& scores, const Graph& g,
                            std::uint64_t n) {
    require_positive(n, "select_top_by_score");
    if (scores.scores.size() != g.node_count()) {
        throw std::invalid_argument("select_top_by_score: score vector does not match graph");
    }
    const std::size_t N = g.node_count();

    SeedSet s;
    switch (scores.metric) {
        case Metric::degree: s.algorithm = SeedAlgo::degree; break;
        case Metric::eigenvector: s.algorithm = SeedAlgo::eigenvector; break;
        case Metric::pagerank: s.algorithm = SeedAlgo::pagerank; break;
    }
    s.n_requested = n;
    s.truncated = n > N;

    std::vector<NodeId> ids(N);
    std::iota(ids.begin(), ids.end(), NodeId{0});
    std::sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) {
        if (scores.scores[a] != scores.scores[b]) return scores.scores[a] > scores.scores[b];
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    ids.resize(std::min<std::size_t>(n, N));
    s.members = std::move(ids);
    return s;
}

SeedSet select_kshell_baseline(const ShellAssignment& sa, const Graph& g,
                               std::uint64_t n) {
    require_positive(n, "select_kshell_baseline");
    const std::size_t N = g.node_count();

    SeedSet s;
    s.algorithm = SeedAlgo::kshell;
    s.n_requested = n;
    s.truncated = n > N;

    std::vector<NodeId> ids(N);
    std::iota(ids.begin(), ids.end(), NodeId{0});
    std::sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) {
        if (sa.shell_index[a] != sa.shell_index[b]) return sa.shell_index[a] > sa.shell_index[b];
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    ids.resize(std::min<std::size_t>(n, N));
    s.members = std::move(ids);
    return s;
}

SeedSet select_ks_p(const ShellAssignment& sa, const Graph& g, std::uint64_t n) {
    require_positive(n, "select_ks_p");
    const std::size_t N = g.node_count();
    if (N == 0) return make_empty(SeedAlgo::ks_proportional, n);

    std::vector<std::pair<std::uint32_t, std::uint64_t>> pops;
    pops.reserve(sa.shells.size());
    for (const auto& [shell, members] : sa.shells) pops.emplace_back(shell, members.size());

    auto quotas = allocate_proportional(pops, n);

    SeedSet s;
    s.algorithm = SeedAlgo::ks_proportional;
    s.n_requested = n;
    s.truncated = n > N;
    for (std::size_t i = 0; i < sa.shells.size(); ++i) {
        auto picks = by_degree(sa.shells[i].second, g);
        std::uint64_t take = std::min<std::uint64_t>(quotas[i], picks.size());
        s.members.insert(s.members.end(), picks.begin(), picks.begin() + take);
        s.allocation_trace.push_back({sa.shells[i].first, quotas[i], take});
    }
    return s;
}

SeedSet select_ks_hp(const ShellAssignment& sa, const Graph& g, std::uint64_t n) {
    require_positive(n, "select_ks_hp");
    const std::size_t N = g.node_count();
    if (N == 0) return make_empty(SeedAlgo::ks_half_proportional, n);

    const std::uint64_t target = std::min<std::uint64_t>(n, N);
    const std::uint64_t half = (n + 1) / 2;

    // First half: top-degree core members. A core smaller than half is taken
    // whole; the deficit moves to the proportional phase.
    const auto& core = sa.shells.front().second;
    auto core_sorted = by_degree(core, g);
    const std::uint64_t first_take = std::min<std::uint64_t>({half, core_sorted.size(), target});

    SeedSet s;
    s.algorithm = SeedAlgo::ks_half_proportional;
    s.n_requested = n;
    s.truncated = n > N;
    s.members.assign(core_sorted.begin(), core_sorted.begin() + first_take);

    // Second half: Ks-P over what is left, populations reduced by the picks.
    std::vector<std::pair<std::uint32_t, std::uint64_t>> pops;
    pops.reserve(sa.shells.size());
    for (std::size_t i = 0; i < sa.shells.size(); ++i) {
        std::uint64_t pop = sa.shells[i].second.size();
        if (i == 0) pop -= first_take;
        pops.emplace_back(sa.shells[i].first, pop);
    }
    const std::uint64_t rest = target - first_take;
    std::vector<std::uint64_t> quotas(pops.size(), 0);
    if (rest > 0) quotas = allocate_proportional(pops, rest);

    for (std::size_t i = 0; i < sa.shells.size(); ++i) {
        std::uint64_t take;
        if (i == 0) {
            take = std::min<std::uint64_t>(quotas[i], core_sorted.size() - first_take);
            s.members.insert(s.members.end(), core_sorted.begin() + first_take,
                             core_sorted.begin() + first_take + take);
            s.allocation_trace.push_back(
                {sa.shells[i].first, first_take + quotas[i], first_take + take});
        } else {
            auto picks = by_degree(sa.shells[i].second, g);
            take = std::min<std::uint64_t>(quotas[i], picks.size());
            s.members.insert(s.members.end(), picks.begin(), picks.begin() + take);
            s.allocation_trace.push_back({sa.shells[i].first, quotas[i], take});
        }
    }
    return s;
}

SeedSet select_seeds(SeedAlgo algo, const Graph& g, std::uint64_t n) {
    switch (algo) {
        case SeedAlgo::degree:
            return select_top_by_score(degree_centrality(g), g, n);
        case SeedAlgo::eigenvector:
            return select_top_by_score(eigenvector_centrality(g), g, n);
        case SeedAlgo::pagerank:
            return select_top_by_score(pagerank(g), g, n);
        case SeedAlgo::kshell:
            return select_kshell_baseline(k_shell_decompose(g), g, n);
        case SeedAlgo::ks_proportional:
            return select_ks_p(k_shell_decompose(g), g, n);
        case SeedAlgo::ks_half_proportional:
            return select_ks_hp(k_shell_decompose(g), g, n);
    }
    throw std::invalid_argument("select_seeds: unknown algorithm");
}

} // namespace kspread
