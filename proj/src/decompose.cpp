#include "kspread/decompose.hpp"

#include <algorithm>

namespace kspread {

ShellAssignment k_shell_decompose(const Graph& g) {
    const std::size_t n = g.node_count();
    ShellAssignment sa;
    if (n == 0) return sa;

    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (NodeId v = 0; v < n; ++v) {
        deg[v] = static_cast<std::uint32_t>(g.degree(v));
        max_deg = std::max(max_deg, deg[v]);
    }

    // Batagelj-Zaversnik bucket peeling: vertices sorted by degree, with the
    // position table letting a decremented vertex swap into its new bucket in
    // O(1). deg[] ends up holding the core numbers.
    std::vector<std::size_t> bucket(max_deg + 1, 0);
    for (NodeId v = 0; v < n; ++v) ++bucket[deg[v]];
    std::size_t start = 0;
    for (std::uint32_t d = 0; d <= max_deg; ++d) {
        std::size_t count = bucket[d];
        bucket[d] = start;
        start += count;
    }
    std::vector<NodeId> vert(n);
    std::vector<std::size_t> pos(n);
    for (NodeId v = 0; v < n; ++v) {
        pos[v] = bucket[deg[v]];
        vert[pos[v]] = v;
        ++bucket[deg[v]];
    }
    for (std::uint32_t d = max_deg; d >= 1; --d) bucket[d] = bucket[d - 1];
    bucket[0] = 0;

    for (std::size_t i = 0; i < n; ++i) {
        NodeId v = vert[i];
        for (NodeId u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                std::uint32_t du = deg[u];
                std::size_t pu = pos[u];
                std::size_t pw = bucket[du];
                NodeId w = vert[pw];
                if (u != w) {
                    vert[pu] = w;
                    vert[pw] = u;
                    pos[u] = pw;
                    pos[w] = pu;
                }
                ++bucket[du];
                --deg[u];
            }
        }
    }

    sa.shell_index = deg;
    sa.core_index = *std::max_element(deg.begin(), deg.end());

    std::vector<std::vector<NodeId>> members(sa.core_index + 1);
    for (NodeId v = 0; v < n; ++v) members[deg[v]].push_back(v);
    for (std::uint32_t s = sa.core_index + 1; s-- > 0;) {
        if (!members[s].empty()) {
            sa.shells.emplace_back(s, std::move(members[s]));
        }
    }
    return sa;
}

std::vector<std::pair<std::uint32_t, std::uint64_t>>
shell_populations(const ShellAssignment& sa) {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> pops;
    pops.reserve(sa.shells.size());
    for (auto it = sa.shells.rbegin(); it != sa.shells.rend(); ++it) {
        pops.emplace_back(it->first, it->second.size());
    }
    return pops;
}

} // namespace kspread
