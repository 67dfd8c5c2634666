// Independent test oracles. Everything here recomputes expected values along
// a different route than the library (full-rescan peeling, dense linear
// algebra, exhaustive outcome enumeration) and must stay free of the
// implementation paths it checks.
#pragma once

#include "kspread/graph.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <vector>

namespace oracles {

using kspread::Graph;
using kspread::NodeId;

// Staged peeling that rebuilds every degree from scratch on every pass:
// at stage s, repeatedly remove all nodes of current degree <= s until none
// qualify, labeling them with shell s; then move to stage s+1.
inline std::vector<std::uint32_t> naive_core_numbers(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> shell(n, 0);
    std::vector<char> removed(n, 0);
    std::size_t left = n;
    std::uint32_t s = 0;
    while (left > 0) {
        bool progress = true;
        while (progress) {
            progress = false;
            std::vector<std::size_t> deg(n, 0);
            for (NodeId i = 0; i < n; ++i) {
                if (removed[i]) continue;
                for (NodeId j : g.neighbors(i)) {
                    if (!removed[j]) ++deg[i];
                }
            }
            for (NodeId i = 0; i < n; ++i) {
                if (!removed[i] && deg[i] <= s) {
                    removed[i] = 1;
                    shell[i] = s;
                    --left;
                    progress = true;
                }
            }
        }
        ++s;
    }
    return shell;
}

inline std::size_t bfs_reachable_count(const Graph& g, std::span<const NodeId> seeds) {
    std::vector<char> seen(g.node_count(), 0);
    std::queue<NodeId> q;
    std::size_t count = 0;
    for (NodeId s : seeds) {
        if (!seen[s]) {
            seen[s] = 1;
            ++count;
            q.push(s);
        }
    }
    while (!q.empty()) {
        NodeId v = q.front();
        q.pop();
        for (NodeId u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                q.push(u);
            }
        }
    }
    return count;
}

// Principal eigenvector of the adjacency matrix via dense symmetric
// eigendecomposition, sign-aligned and max-normalized.
inline std::vector<double> dense_eigenvector(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (NodeId i = 0; i < g.node_count(); ++i) {
        for (NodeId j : g.neighbors(i)) a(i, j) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    Eigen::VectorXd v = es.eigenvectors().col(n - 1); // eigenvalues ascending
    if (v.sum() < 0) v = -v;
    double mx = v.maxCoeff();
    std::vector<double> out(g.node_count());
    for (Eigen::Index i = 0; i < n; ++i) out[i] = v(i) / mx;
    return out;
}

// PageRank by direct dense solve of (I - d*P^T) x = (1-d)/N * 1 where the
// column of a degree-0 node is uniform 1/N.
inline std::vector<double> dense_pagerank(const Graph& g, double damping) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd pt = Eigen::MatrixXd::Zero(n, n);
    for (NodeId j = 0; j < g.node_count(); ++j) {
        if (g.degree(j) == 0) {
            pt.col(j).setConstant(1.0 / static_cast<double>(n));
        } else {
            for (NodeId i : g.neighbors(j)) {
                pt(i, j) = 1.0 / static_cast<double>(g.degree(j));
            }
        }
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) - damping * pt;
    Eigen::VectorXd b =
        Eigen::VectorXd::Constant(n, (1.0 - damping) / static_cast<double>(n));
    Eigen::VectorXd x = m.partialPivLu().solve(b);
    return {x.data(), x.data() + n};
}

// Exact expected coverage of the uninformed/informed dynamics by enumerating
// every outcome of every contact attempt along the trajectory. Exponential;
// only for graphs with a handful of edges.
inline double enumerate_expected_coverage(const Graph& g,
                                          std::span<const NodeId> seeds,
                                          double beta) {
    const std::size_t n = g.node_count();
    std::uint32_t seed_mask = 0;
    for (NodeId s : seeds) seed_mask |= 1u << s;

    std::function<double(std::uint32_t, std::uint32_t)> go =
        [&](std::uint32_t informed, std::uint32_t active) -> double {
        std::vector<NodeId> targets; // one entry per (active, uninformed) contact
        for (NodeId a = 0; a < n; ++a) {
            if (!(active >> a & 1)) continue;
            for (NodeId nb : g.neighbors(a)) {
                if (!(informed >> nb & 1)) targets.push_back(nb);
            }
        }
        if (targets.empty()) {
            return static_cast<double>(std::popcount(informed)) / static_cast<double>(n);
        }
        double acc = 0.0;
        for (std::uint32_t outcome = 0; outcome < (1u << targets.size()); ++outcome) {
            double p = 1.0;
            std::uint32_t newly = 0;
            for (std::size_t t = 0; t < targets.size(); ++t) {
                if (outcome >> t & 1) {
                    p *= beta;
                    newly |= 1u << targets[t];
                } else {
                    p *= 1.0 - beta;
                }
            }
            if (p > 0.0) acc += p * go(informed | newly, newly);
        }
        return acc;
    };
    return go(seed_mask, seed_mask);
}

// Random multigraph-style arc list, self-loops and duplicates included, for
// exercising ingestion invariants.
inline std::vector<std::pair<NodeId, NodeId>>
random_arcs(std::mt19937_64& rng, std::uint32_t n, std::size_t count) {
    std::vector<std::pair<NodeId, NodeId>> arcs;
    arcs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        arcs.emplace_back(static_cast<NodeId>(rng() % n),
                          static_cast<NodeId>(rng() % n));
    }
    return arcs;
}

} // namespace oracles
