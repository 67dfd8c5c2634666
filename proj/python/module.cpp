#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kspread/bench.hpp"
#include "kspread/centrality.hpp"
#include "kspread/decompose.hpp"
#include "kspread/diffusion.hpp"
#include "kspread/graph.hpp"
#include "kspread/seeding.hpp"

#include <sstream>

namespace py = pybind11;
using namespace kspread;

PYBIND11_MODULE(_kspread, m) {
    m.doc() = "k-shell proportional seed selection and idea-spread simulation";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("i"))
        .def("neighbors",
             [](const Graph& g, NodeId i) {
                 auto nbs = g.neighbors(i);
                 return std::vector<NodeId>(nbs.begin(), nbs.end());
             },
             py::arg("i"))
        .def("label", &Graph::label, py::arg("i"))
        .def("id_of", &Graph::id_of, py::arg("label"))
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(N=" << g.node_count() << ", M=" << g.edge_count() << ")";
            return s.str();
        });

    m.def("parse_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return parse_edge_list(in);
    }, py::arg("text"));
    m.def("load_edge_list", [](const std::string& path) {
        return load_edge_list(std::filesystem::path(path));
    }, py::arg("path"));
    m.def("to_edge_list", &to_edge_list, py::arg("graph"));
    m.def("from_edges", [](std::size_t node_count,
                           const std::vector<std::pair<NodeId, NodeId>>& arcs) {
        return Graph::from_edges(node_count, arcs);
    }, py::arg("node_count"), py::arg("arcs"));
    m.def("erdos_renyi", &erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("barabasi_albert", &barabasi_albert, py::arg("n"), py::arg("m"), py::arg("seed"));

    py::class_<ShellAssignment>(m, "ShellAssignment")
        .def_readonly("shell_index", &ShellAssignment::shell_index)
        .def_readonly("shells", &ShellAssignment::shells)
        .def_readonly("core_index", &ShellAssignment::core_index);
    m.def("k_shell_decompose", &k_shell_decompose, py::arg("graph"));
    m.def("shell_populations", &shell_populations, py::arg("assignment"));

    py::enum_<Metric>(m, "Metric")
        .value("degree", Metric::degree)
        .value("eigenvector", Metric::eigenvector)
        .value("pagerank", Metric::pagerank);
    py::class_<ScoreVector>(m, "ScoreVector")
        .def_readonly("metric", &ScoreVector::metric)
        .def_readonly("scores", &ScoreVector::scores)
        .def_readonly("iterations_used", &ScoreVector::iterations_used)
        .def_readonly("residual", &ScoreVector::residual)
        .def_readonly("converged", &ScoreVector::converged);
    m.def("degree_centrality", &degree_centrality, py::arg("graph"));
    m.def("eigenvector_centrality", &eigenvector_centrality, py::arg("graph"),
          py::arg("tol") = kDefaultTol, py::arg("max_iter") = kDefaultMaxIter);
    m.def("pagerank", &pagerank, py::arg("graph"), py::arg("damping") = kDefaultDamping,
          py::arg("tol") = kDefaultTol, py::arg("max_iter") = kDefaultMaxIter);

    py::enum_<SeedAlgo>(m, "SeedAlgo")
        .value("degree", SeedAlgo::degree)
        .value("eigenvector", SeedAlgo::eigenvector)
        .value("pagerank", SeedAlgo::pagerank)
        .value("kshell", SeedAlgo::kshell)
        .value("ks_proportional", SeedAlgo::ks_proportional)
        .value("ks_half_proportional", SeedAlgo::ks_half_proportional);
    py::class_<ShellQuota>(m, "ShellQuota")
        .def_readonly("shell", &ShellQuota::shell)
        .def_readonly("quota", &ShellQuota::quota)
        .def_readonly("selected", &ShellQuota::selected);
    py::class_<SeedSet>(m, "SeedSet")
        .def_readonly("algorithm", &SeedSet::algorithm)
        .def_readonly("n_requested", &SeedSet::n_requested)
        .def_readonly("members", &SeedSet::members)
        .def_readonly("allocation_trace", &SeedSet::allocation_trace)
        .def_readonly("truncated", &SeedSet::truncated);
    m.def("allocate_proportional",
          [](const std::vector<std::pair<std::uint32_t, std::uint64_t>>& pops,
             std::uint64_t n) { return allocate_proportional(pops, n); },
          py::arg("populations"), py::arg("n"));
    m.def("select_top_by_score", &select_top_by_score, py::arg("scores"),
          py::arg("graph"), py::arg("n"));
    m.def("select_kshell_baseline", &select_kshell_baseline, py::arg("assignment"),
          py::arg("graph"), py::arg("n"));
    m.def("select_ks_p", &select_ks_p, py::arg("assignment"), py::arg("graph"),
          py::arg("n"));
    m.def("select_ks_hp", &select_ks_hp, py::arg("assignment"), py::arg("graph"),
          py::arg("n"));
    m.def("select_seeds", &select_seeds, py::arg("algo"), py::arg("graph"), py::arg("n"));

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("beta", &SimConfig::beta)
        .def_readwrite("realizations", &SimConfig::realizations)
        .def_readwrite("master_seed", &SimConfig::master_seed)
        .def_readwrite("max_steps", &SimConfig::max_steps);
    py::class_<SimResult>(m, "SimResult")
        .def_readonly("informed_count", &SimResult::informed_count)
        .def_readonly("coverage", &SimResult::coverage)
        .def_readonly("steps_taken", &SimResult::steps_taken);
    py::class_<AggregateResult>(m, "AggregateResult")
        .def_readonly("mean_coverage", &AggregateResult::mean_coverage)
        .def_readonly("std_dev", &AggregateResult::std_dev)
        .def_readonly("coverages", &AggregateResult::coverages)
        .def_readonly("steps", &AggregateResult::steps);
    m.def("realization_seed", &realization_seed, py::arg("master_seed"), py::arg("index"));
    m.def("simulate_once",
          [](const Graph& g, const std::vector<NodeId>& seeds, double beta,
             std::uint64_t rng_seed, std::uint32_t max_steps) {
              return simulate_once(g, seeds, beta, rng_seed, max_steps);
          },
          py::arg("graph"), py::arg("seeds"), py::arg("beta"), py::arg("rng_seed"),
          py::arg("max_steps") = 0);
    m.def("simulate_mean",
          [](const Graph& g, const std::vector<NodeId>& seeds, const SimConfig& cfg) {
              py::gil_scoped_release release; // realizations run on worker threads
              return simulate_mean(g, seeds, cfg);
          },
          py::arg("graph"), py::arg("seeds"), py::arg("config"));

#ifdef KSPREAD_VERSION
    m.attr("__version__") = KSPREAD_VERSION;
#else
    m.attr("__version__") = kToolVersion;
#endif
}
