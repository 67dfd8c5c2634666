#pragma once

#include "kspread/graph.hpp"

namespace kspread {

/// Result of k-shell decomposition.
///
/// shell_index[i] is the classical core number of node i; isolated nodes sit
/// in shell 0. shells lists every non-empty shell as (shell value, members in
/// ascending id order), sorted by shell value descending so the core comes
/// first.
struct ShellAssignment {
    std::vector<std::uint32_t> shell_index;
    std::vector<std::pair<std::uint32_t, std::vector<NodeId>>> shells;
    std::uint32_t core_index = 0;
};

/// Iterative degree pruning via bucket peeling, O(N + M).
ShellAssignment k_shell_decompose(const Graph& g);

/// (shell value, population) sorted by shell value ascending. Populations sum
/// to the node count.
std::vector<std::pair<std::uint32_t, std::uint64_t>>
shell_populations(const ShellAssignment& sa);

} // namespace kspread
