#include "kspread/centrality.hpp"

#include <algorithm>
#include <cmath>

namespace kspread {

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::degree: return "degree";
        case Metric::eigenvector: return "eigenvector";
        case Metric::pagerank: return "pagerank";
    }
    return "?";
}

std::optional<Metric> metric_from_string(std::string_view s) {
    if (s == "degree") return Metric::degree;
    if (s == "eigenvector") return Metric::eigenvector;
    if (s == "pagerank") return Metric::pagerank;
    return std::nullopt;
}

ScoreVector degree_centrality(const Graph& g) {
    ScoreVector sv;
    sv.metric = Metric::degree;
    sv.scores.resize(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i) {
        sv.scores[i] = static_cast<double>(g.degree(i));
    }
    return sv;
}

ScoreVector eigenvector_centrality(const Graph& g, double tol, int max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("eigenvector_centrality: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("eigenvector_centrality: max_iter must be >= 1");

    const std::size_t n = g.node_count();
    ScoreVector sv;
    sv.metric = Metric::eigenvector;
    sv.scores.assign(n, 0.0);
    if (n == 0 || g.edge_count() == 0) return sv;

    std::vector<double> x(n, 1.0); // uniform start, already max-normalized
    std::vector<double> next(n);
    double residual = 0.0;
    int it = 0;
    bool converged = false;
    while (it < max_iter) {
        ++it;
        for (NodeId i = 0; i < n; ++i) {
            double acc = x[i];
            for (NodeId j : g.neighbors(i)) acc += x[j];
            next[i] = acc;
        }
        double mx = *std::max_element(next.begin(), next.end());
        for (double& v : next) v /= mx;
        residual = 0.0;
        for (NodeId i = 0; i < n; ++i) {
            residual = std::max(residual, std::abs(next[i] - x[i]));
        }
        x.swap(next);
        if (residual < tol) {
            converged = true;
            break;
        }
    }
    sv.scores = std::move(x);
    sv.iterations_used = it;
    sv.residual = residual;
    sv.converged = converged;
    return sv;
}

ScoreVector pagerank(const Graph& g, double damping, double tol, int max_iter) {
    if (!(damping > 0.0 && damping < 1.0)) {
        throw std::invalid_argument("pagerank: damping must be in (0, 1)");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("pagerank: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("pagerank: max_iter must be >= 1");

    const std::size_t n = g.node_count();
    ScoreVector sv;
    sv.metric = Metric::pagerank;
    sv.scores.assign(n, 0.0);
    if (n == 0) return sv;

    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    double residual = 0.0;
    int it = 0;
    bool converged = false;
    while (it < max_iter) {
        ++it;
        double dangling = 0.0;
        for (NodeId i = 0; i < n; ++i) {
            if (g.degree(i) == 0) dangling += x[i];
        }
        const double base =
            (1.0 - damping) / static_cast<double>(n) + damping * dangling / static_cast<double>(n);
        for (NodeId i = 0; i < n; ++i) {
            double acc = 0.0;
            for (NodeId j : g.neighbors(i)) {
                acc += x[j] / static_cast<double>(g.degree(j));
            }
            next[i] = base + damping * acc;
        }
        residual = 0.0;
        for (NodeId i = 0; i < n; ++i) residual += std::abs(next[i] - x[i]);
        x.swap(next);
        if (residual < tol) {
            converged = true;
            break;
        }
    }
    sv.scores = std::move(x);
    sv.iterations_used = it;
    sv.residual = residual;
    sv.converged = converged;
    return sv;
}

} // namespace kspread
