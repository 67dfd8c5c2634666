#pragma once

#include "kspread/graph.hpp"

namespace kspread {

enum class Metric { degree, eigenvector, pagerank };

const char* metric_name(Metric m);
std::optional<Metric> metric_from_string(std::string_view s);

inline constexpr double kDefaultTol = 1e-8;
inline constexpr int kDefaultMaxIter = 1000;
inline constexpr double kDefaultDamping = 0.85;

/// Per-node scores for one metric. Degree scores are the raw integer degrees,
/// eigenvector scores are max-normalized to [0, 1], PageRank scores sum to 1.
struct ScoreVector {
    Metric metric = Metric::degree;
    std::vector<double> scores;
    int iterations_used = 0;
    double residual = 0.0;
    bool converged = true;
};

ScoreVector degree_centrality(const Graph& g);

/// Power iteration on the shifted adjacency operator I + A from the uniform
/// positive start vector (the shift keeps bipartite graphs from oscillating;
/// the fixed point is the principal eigenvector of A either way). Converged
/// when the max-norm change between successive normalized iterates drops
/// below tol; non-convergence is reported through the converged flag, never
/// thrown. An edgeless graph has no eigenvector signal and yields all zeros.
ScoreVector eigenvector_centrality(const Graph& g, double tol = kDefaultTol,
                                   int max_iter = kDefaultMaxIter);

/// Standard PageRank power iteration with uniform teleport. Degree-0 nodes
/// spread their mass uniformly over all nodes. Converged when the L1 change
/// drops below tol; mass is conserved at every iteration.
ScoreVector pagerank(const Graph& g, double damping = kDefaultDamping,
                     double tol = kDefaultTol, int max_iter = kDefaultMaxIter);

} // namespace kspread
