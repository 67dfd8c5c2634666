#include "kspread/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace kspread {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

void Graph::check_id(NodeId i) const {
    if (i >= node_count()) {
        throw std::out_of_range("node id " + std::to_string(i) +
                                " out of range (N=" + std::to_string(node_count()) + ")");
    }
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
    check_id(i);
    return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::size_t Graph::degree(NodeId i) const {
    check_id(i);
    return offsets_[i + 1] - offsets_[i];
}

const std::string& Graph::label(NodeId i) const {
    check_id(i);
    return labels_[i];
}

std::optional<NodeId> Graph::id_of(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

Graph Graph::from_edges(std::size_t node_count,
                        std::span<const std::pair<NodeId, NodeId>> arcs) {
    std::vector<std::string> labels;
    labels.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
    return from_edges(node_count, arcs, std::move(labels));
}

Graph Graph::from_edges(std::size_t node_count,
                        std::span<const std::pair<NodeId, NodeId>> arcs,
                        std::vector<std::string> labels) {
    if (labels.size() != node_count) {
        throw std::invalid_argument("label count does not match node count");
    }

    std::vector<std::pair<NodeId, NodeId>> dir;
    dir.reserve(arcs.size() * 2);
    for (auto [u, v] : arcs) {
        if (u >= node_count || v >= node_count) {
            throw std::invalid_argument("arc endpoint out of range");
        }
        if (u == v) continue; // self-loop
        dir.emplace_back(u, v);
        dir.emplace_back(v, u);
    }
    std::sort(dir.begin(), dir.end());
    dir.erase(std::unique(dir.begin(), dir.end()), dir.end());

    Graph g;
    g.offsets_.assign(node_count + 1, 0);
    for (auto [u, v] : dir) ++g.offsets_[u + 1];
    for (std::size_t i = 1; i <= node_count; ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.adjacency_.reserve(dir.size());
    for (auto [u, v] : dir) g.adjacency_.push_back(v); // dir is sorted, rows stay sorted

    g.labels_ = std::move(labels);
    g.label_index_.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
        auto [it, inserted] = g.label_index_.emplace(g.labels_[i], static_cast<NodeId>(i));
        if (!inserted) throw std::invalid_argument("duplicate node label: " + g.labels_[i]);
    }
    return g;
}

bool Graph::operator==(const Graph& other) const {
    if (node_count() != other.node_count() || edge_count() != other.edge_count()) {
        return false;
    }
    std::vector<NodeId> mapped;
    for (NodeId i = 0; i < node_count(); ++i) {
        auto oid = other.id_of(labels_[i]);
        if (!oid) return false;
        auto mine = neighbors(i);
        auto theirs = other.neighbors(*oid);
        if (mine.size() != theirs.size()) return false;
        mapped.clear();
        for (NodeId nb : mine) {
            auto m = other.id_of(labels_[nb]);
            if (!m) return false;
            mapped.push_back(*m);
        }
        std::sort(mapped.begin(), mapped.end());
        if (!std::equal(mapped.begin(), mapped.end(), theirs.begin())) return false;
    }
    return true;
}

namespace {

constexpr const char* kWhitespace = " \t\r\f\v";

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<NodeId, NodeId>> arcs;

    auto intern = [&](std::string token) -> NodeId {
        auto it = ids.find(token);
        if (it != ids.end()) return it->second;
        NodeId id = static_cast<NodeId>(labels.size());
        ids.emplace(token, id);
        labels.push_back(std::move(token));
        return id;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(kWhitespace);
        if (pos == std::string::npos || line[pos] == '#') continue;

        std::string tok[2];
        int ntok = 0;
        while (pos != std::string::npos) {
            std::size_t end = line.find_first_of(kWhitespace, pos);
            std::size_t len = (end == std::string::npos ? line.size() : end) - pos;
            if (ntok == 2) {
                throw ParseError(lineno, "expected 2 node labels, got more");
            }
            tok[ntok++] = line.substr(pos, len);
            pos = line.find_first_not_of(kWhitespace, end);
        }
        if (ntok != 2) {
            throw ParseError(lineno, "expected 2 node labels, got " + std::to_string(ntok));
        }
        NodeId u = intern(std::move(tok[0]));
        NodeId v = intern(std::move(tok[1]));
        if (u != v) arcs.emplace_back(u, v);
    }
    const std::size_t n = labels.size();
    return Graph::from_edges(n, arcs, std::move(labels));
}

Graph load_edge_list(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("cannot open " + file.string());
    }
    return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (NodeId i = 0; i < g.node_count(); ++i) {
        for (NodeId j : g.neighbors(i)) {
            if (j > i) out << g.label(i) << '\t' << g.label(j) << '\n';
        }
    }
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

namespace {

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

Graph erdos_renyi(std::uint32_t n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("erdos_renyi: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("erdos_renyi: p must be in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<NodeId, NodeId>> arcs;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (uniform01(rng) < p) arcs.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, arcs);
}

Graph barabasi_albert(std::uint32_t n, std::uint32_t m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("barabasi_albert: n must be >= 1");
    if (m < 1 || m >= n) {
        throw std::invalid_argument("barabasi_albert: need 1 <= m < n");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<NodeId, NodeId>> arcs;
    // One entry per edge endpoint, so uniform draws are degree-proportional.
    std::vector<NodeId> endpoints;

    NodeId clique = std::min<NodeId>(3, n);
    for (NodeId i = 0; i < clique; ++i) {
        for (NodeId j = i + 1; j < clique; ++j) {
            arcs.emplace_back(i, j);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    }
    std::vector<NodeId> targets;
    for (NodeId t = clique; t < n; ++t) {
        NodeId want = std::min(m, t);
        targets.clear();
        while (targets.size() < want) {
            NodeId cand = endpoints[rng() % endpoints.size()];
            if (std::find(targets.begin(), targets.end(), cand) == targets.end()) {
                targets.push_back(cand);
            }
        }
        for (NodeId v : targets) {
            arcs.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return Graph::from_edges(n, arcs);
}

} // namespace kspread
