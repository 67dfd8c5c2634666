#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kspread {

using NodeId = std::uint32_t;

/// Thrown on malformed edge-list input. Carries the offending 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Immutable undirected simple graph with contiguous node ids.
///
/// Adjacency is stored in CSR form; neighbors(i) is sorted, duplicate-free and
/// never contains i itself. External node labels (whatever appeared in the
/// input file) are kept so reports can speak the caller's language, but all
/// algorithms work on the dense internal ids.
class Graph {
public:
    Graph() = default;

    /// Build from arcs over already-contiguous ids. Self-loops are dropped and
    /// duplicate arcs (either direction) collapse into a single undirected
    /// edge. Labels default to the decimal id when not supplied.
    static Graph from_edges(std::size_t node_count,
                            std::span<const std::pair<NodeId, NodeId>> arcs);
    static Graph from_edges(std::size_t node_count,
                            std::span<const std::pair<NodeId, NodeId>> arcs,
                            std::vector<std::string> labels);

    std::size_t node_count() const noexcept {
        return offsets_.empty() ? 0 : offsets_.size() - 1;
    }
    std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId i) const;
    std::size_t degree(NodeId i) const;

    const std::string& label(NodeId i) const;
    std::optional<NodeId> id_of(std::string_view label) const;

    /// Equality of the labeled structure: same label set and the same edges
    /// between labels. Internal id assignment does not participate.
    bool operator==(const Graph& other) const;

private:
    void check_id(NodeId i) const;

    std::vector<std::size_t> offsets_;   // node_count + 1 entries
    std::vector<NodeId> adjacency_;      // 2 * edge_count, sorted per row
    std::vector<std::string> labels_;    // internal id -> external label
    std::unordered_map<std::string, NodeId> label_index_;
};

/// Parse a SNAP-style edge list: one `u v` pair per line, whitespace
/// separated, `#` lines ignored. Every arc is symmetrized; self-loops and
/// duplicates are dropped. Labels are assigned contiguous ids in order of
/// first appearance. An empty stream yields the empty graph.
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& file);

/// Write the graph back out in the same format, one line per undirected edge.
/// Isolated nodes have no representation in an edge list and are not emitted.
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);

/// G(n, p): every unordered pair becomes an edge independently with
/// probability p. Deterministic for a fixed seed.
Graph erdos_renyi(std::uint32_t n, double p, std::uint64_t seed);

/// Preferential attachment starting from a 3-clique; each new node attaches to
/// m distinct existing nodes sampled proportionally to degree (without
/// replacement). Deterministic for a fixed seed.
Graph barabasi_albert(std::uint32_t n, std::uint32_t m, std::uint64_t seed);

} // namespace kspread
