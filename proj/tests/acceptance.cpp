// Acceptance suite: every release criterion with its pinned tolerance, one
// line of output each. Criteria that need user-supplied datasets (edge lists
// are never bundled or downloaded here) report SKIP when the file is absent;
// scripts/fetch_datasets.sh places them under data/.
//
//   usage: acceptance [criterion]
#include "kspread/bench.hpp"
#include "kspread/centrality.hpp"
#include "kspread/decompose.hpp"
#include "kspread/diffusion.hpp"
#include "kspread/graph.hpp"
#include "kspread/seeding.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace kspread;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    enum Status { pass, fail, skip, info } status;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

fs::path data_dir() {
    if (const char* env = std::getenv("KSPREAD_DATA_DIR")) return env;
    return "data";
}

std::optional<fs::path> find_dataset(const std::string& filename) {
    fs::path p = data_dir() / filename;
    if (fs::exists(p)) return p;
    return std::nullopt;
}

std::string fmt(double v, int prec = 4) {
    std::ostringstream s;
    s.precision(prec);
    s << std::fixed << v;
    return s.str();
}

Outcome timed_bound(Outcome o, double elapsed_ms, double bound_ms) {
    o.detail += " (" + fmt(elapsed_ms, 2) + " ms)";
    if (o.status == Outcome::pass && elapsed_ms > bound_ms) {
        o.status = Outcome::fail;
        o.detail += " exceeds the " + fmt(bound_ms, 0) + " ms budget";
    }
    return o;
}

// --- criterion 1: proportional allocation worked example -------------------
Outcome criterion1() {
    using Pops = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
    Pops innermost_first{{3, 40}, {2, 60}, {1, 100}};
    auto t0 = Clock::now();
    auto quotas = allocate_proportional(innermost_first, 10);
    double elapsed = ms_since(t0);
    bool ok = quotas == std::vector<std::uint64_t>{2, 3, 5};
    Outcome o{ok ? Outcome::pass : Outcome::fail,
              "populations 100/60/40, n=10 -> quotas outer-to-inner " +
                  std::to_string(quotas[2]) + "/" + std::to_string(quotas[1]) + "/" +
                  std::to_string(quotas[0]) + ", expected 5/3/2"};
    return timed_bound(std::move(o), elapsed, 1.0);
}

// --- criterion 2: bucket peeling equals the naive oracle -------------------
Outcome criterion2() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(20240601);
    for (int rep = 0; rep < 100; ++rep) {
        std::uint32_t n = 1 + rng() % 200;
        double p = (1 + rng() % 120) / 400.0; // densities up to 0.3
        Graph g = erdos_renyi(n, p, rng());
        auto sa = k_shell_decompose(g);
        auto expect = oracles::naive_core_numbers(g);
        for (NodeId i = 0; i < n; ++i) {
            if (sa.shell_index[i] != expect[i]) {
                return {Outcome::fail,
                        "mismatch at rep " + std::to_string(rep) + " node " +
                            std::to_string(i) + ": got " +
                            std::to_string(sa.shell_index[i]) + ", oracle " +
                            std::to_string(expect[i])};
            }
        }
    }
    return timed_bound({Outcome::pass, "100 random graphs, node-for-node equal"},
                       ms_since(t0), 5000.0);
}

// --- criterion 3: Email-Eu-core reference shell statistics ------------------
Outcome criterion3() {
    auto file = find_dataset("email-Eu-core.txt");
    if (!file) {
        return {Outcome::skip,
                "dataset email-Eu-core.txt not under " + data_dir().string() +
                    "/ (run scripts/fetch_datasets.sh)"};
    }
    auto t0 = Clock::now();
    Graph g = load_edge_list(*file);
    auto sa = k_shell_decompose(g);
    double elapsed = ms_since(t0);

    const std::size_t shells = sa.shells.size();
    const std::size_t core = sa.shells.empty() ? 0 : sa.shells.front().second.size();
    std::string detail = "N=" + std::to_string(g.node_count()) +
                         " (expect 1005), M_sym=" + std::to_string(g.edge_count()) +
                         ", shells=" + std::to_string(shells) +
                         " (expect 34 +/- 2), core=" + std::to_string(core) +
                         " (expect 79 +/- 10)";
    if (g.node_count() != 1005) return {Outcome::fail, detail};
    long dshells = static_cast<long>(shells) - 34;
    long dcore = static_cast<long>(core) - 79;
    if (std::labs(dshells) > 2 || std::labs(dcore) > 10) {
        return {Outcome::fail, detail};
    }
    if (dshells != 0 || dcore != 0) {
        detail += "; within tolerance, delta attributed to symmetrized preprocessing";
    }
    return timed_bound({Outcome::pass, detail}, elapsed, 1000.0);
}

// --- criterion 4: exact-enumeration diffusion means ------------------------
Outcome criterion4() {
    auto t0 = Clock::now();
    struct Case {
        const char* text;
        double expect;
    } cases[] = {
        {"a b\n", 0.75},
        {"a b\nb c\n", (1.0 + 0.5 + 0.25) / 3.0},
    };
    std::string detail;
    for (const auto& c : cases) {
        std::istringstream in(c.text);
        Graph g = parse_edge_list(in);
        std::vector<NodeId> seeds{*g.id_of("a")};

        double exact = oracles::enumerate_expected_coverage(g, seeds, 0.5);
        if (std::abs(exact - c.expect) > 1e-12) {
            return {Outcome::fail, "enumeration oracle disagrees with the closed form: " +
                                       fmt(exact, 6) + " vs " + fmt(c.expect, 6)};
        }
        SimConfig cfg;
        cfg.beta = 0.5;
        cfg.realizations = 10000;
        cfg.master_seed = 2718;
        auto agg = simulate_mean(g, seeds, cfg);
        if (!detail.empty()) detail += "; ";
        detail += "path-" + std::to_string(g.node_count()) + " mean " +
                  fmt(agg.mean_coverage) + " vs exact " + fmt(c.expect);
        if (std::abs(agg.mean_coverage - c.expect) > 0.02) {
            return {Outcome::fail, detail + " (outside +/- 0.02)"};
        }
    }
    return timed_bound({Outcome::pass, detail}, ms_since(t0), 10000.0);
}

// --- criterion 5: beta = 0 and beta = 1 degeneracies ------------------------
Outcome criterion5() {
    auto t0 = Clock::now();
    std::istringstream in("a b\nb c\nc a\nx l1\nx l2\nx l3\nx l4\n");
    Graph fixtures[] = {parse_edge_list(in), erdos_renyi(100, 0.05, 5),
                        barabasi_albert(150, 2, 9)};
    std::mt19937_64 rng(64);
    for (const Graph& g : fixtures) {
        auto gt0 = Clock::now();
        std::vector<NodeId> seeds{static_cast<NodeId>(rng() % g.node_count()),
                                  static_cast<NodeId>(rng() % g.node_count())};
        std::size_t distinct = seeds[0] == seeds[1] ? 1 : 2;

        auto zero = simulate_once(g, seeds, 0.0, rng());
        double expect0 = static_cast<double>(distinct) / static_cast<double>(g.node_count());
        if (zero.coverage != expect0 || zero.informed_count != distinct) {
            return {Outcome::fail, "beta=0 coverage " + fmt(zero.coverage, 6) +
                                       " != |seeds|/N " + fmt(expect0, 6)};
        }

        SimConfig cfg;
        cfg.beta = 1.0;
        cfg.realizations = 10;
        cfg.master_seed = rng();
        auto one = simulate_mean(g, seeds, cfg);
        double reach = static_cast<double>(oracles::bfs_reachable_count(g, seeds)) /
                       static_cast<double>(g.node_count());
        if (one.mean_coverage != reach) {
            return {Outcome::fail, "beta=1 coverage " + fmt(one.mean_coverage, 6) +
                                       " != BFS fraction " + fmt(reach, 6)};
        }
        if (one.std_dev != 0.0) {
            return {Outcome::fail, "beta=1 variance is not zero"};
        }
        if (ms_since(gt0) > 1000.0) {
            return {Outcome::fail, "a single graph exceeded the 1 s budget"};
        }
    }
    Outcome o{Outcome::pass, "beta=0 and beta=1 exact on 3 graphs"};
    o.detail += " (" + fmt(ms_since(t0), 2) + " ms)";
    return o;
}

ExperimentConfig reproduction_config(const std::string& name, const fs::path& file) {
    ExperimentConfig cfg;
    cfg.datasets.push_back({name, file.string()});
    cfg.seed_mode = SeedMode::proportional;
    cfg.fraction = 0.10;
    cfg.sim.beta = 0.09;
    cfg.sim.realizations = 100;
    cfg.sim.master_seed = 42;
    return cfg;
}

// --- criterion 6: all six within [0.95, 1.05] on Email-Eu-core --------------
Outcome criterion6() {
    auto file = find_dataset("email-Eu-core.txt");
    if (!file) {
        return {Outcome::skip,
                "dataset email-Eu-core.txt not under " + data_dir().string() +
                    "/ (run scripts/fetch_datasets.sh)"};
    }
    auto t0 = Clock::now();
    auto rep = run_experiment(reproduction_config("email", *file));
    if (!rep.errors.empty()) return {Outcome::fail, rep.errors[0].message};

    std::string detail;
    bool ok = true;
    for (const auto& row : rep.rows) {
        if (!detail.empty()) detail += ", ";
        detail += row.algorithm + "=" + fmt(row.relative_coverage, 3);
        if (row.relative_coverage < 0.95 || row.relative_coverage > 1.05) ok = false;
    }
    return timed_bound({ok ? Outcome::pass : Outcome::fail,
                        "relative coverages " + detail + " (band [0.95, 1.05])"},
                       ms_since(t0), 120000.0);
}

// --- criterion 7: Ks-P advantage on Wiki-Vote -------------------------------
Outcome criterion7() {
    auto file = find_dataset("wiki-Vote.txt");
    if (!file) {
        return {Outcome::skip,
                "dataset wiki-Vote.txt not under " + data_dir().string() +
                    "/ (run scripts/fetch_datasets.sh)"};
    }
    auto t0 = Clock::now();
    auto rep = run_experiment(reproduction_config("wiki-vote", *file));
    if (!rep.errors.empty()) return {Outcome::fail, rep.errors[0].message};

    double ksp = 0.0;
    for (const auto& row : rep.rows) {
        if (row.algorithm == "Ks-P") ksp = row.relative_coverage;
    }
    std::string detail = "Ks-P relative coverage " + fmt(ksp, 3) +
                         " (target 1.10 +/- 0.05, pass >= 1.05, fail <= 1.0)";
    Outcome o{Outcome::pass, detail};
    if (ksp <= 1.0) {
        o.status = Outcome::fail;
    } else if (ksp < 1.05) {
        o.detail += "; below the target band but > 1.0 - documented deviation "
                    "(preprocessing/RNG ambiguity)";
    }
    return timed_bound(std::move(o), ms_since(t0), 600000.0);
}

// --- criterion 8: byte-identical reports under a fixed master seed ----------
Outcome criterion8() {
    auto t0 = Clock::now();
    fs::path file;
    std::string name;
    fs::path scratch;
    if (auto email = find_dataset("email-Eu-core.txt")) {
        file = *email;
        name = "email";
    } else {
        // datasets are user-supplied; determinism is checked on a generated
        // stand-in written through the same file path
        scratch = fs::temp_directory_path() / "kspread_acceptance_det.txt";
        std::ofstream out(scratch);
        write_edge_list(barabasi_albert(500, 3, 77), out);
        out.close();
        file = scratch;
        name = "synthetic-ba";
    }
    auto cfg = reproduction_config(name, file);
    auto a = emit_report(run_experiment(cfg), ReportFormat::csv);
    auto b = emit_report(run_experiment(cfg), ReportFormat::csv);
    if (!scratch.empty()) fs::remove(scratch);
    if (a != b) return {Outcome::fail, "two identical runs differ on " + name};
    Outcome o{Outcome::pass, "report.csv byte-identical across two runs on " + name};
    o.detail += " (" + fmt(ms_since(t0), 2) + " ms)";
    return o;
}

// --- criterion 9: large-network headline claims (directional only) ----------
Outcome criterion9() {
    const std::pair<const char*, const char*> large[] = {
        {"epinions", "soc-Epinions1.txt"},
        {"ca-cond-mat", "ca-CondMat.txt"},
        {"dblp", "com-dblp.ungraph.txt"},
    };
    ExperimentConfig cfg;
    cfg.seed_mode = SeedMode::proportional;
    cfg.fraction = 0.10;
    cfg.sim.beta = 0.09;
    cfg.sim.realizations = 100;
    cfg.sim.master_seed = 42;
    for (const auto& [name, filename] : large) {
        if (auto file = find_dataset(filename)) cfg.datasets.push_back({name, file->string()});
    }
    if (cfg.datasets.empty()) {
        return {Outcome::skip,
                "no large-network dataset supplied; not a desk-scale gate - run "
                "`kspread bench --full` after fetching Epinions/CA-Cond-Mat/DBLP"};
    }
    auto rep = run_experiment(cfg);
    std::string detail;
    bool ok = true;
    for (const auto& row : rep.rows) {
        if (row.algorithm != "Ks-P") continue;
        if (!detail.empty()) detail += ", ";
        detail += row.dataset + "=" + fmt(row.relative_coverage, 3);
        if (!(row.relative_coverage > 1.0)) ok = false;
    }
    for (const auto& err : rep.errors) {
        ok = false;
        detail += (detail.empty() ? "" : ", ") + err.dataset + ": " + err.message;
    }
    return {ok ? Outcome::pass : Outcome::fail,
            "directional Ks-P > 1.0 check: " + detail};
}

} // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;

    struct Entry {
        int id;
        const char* title;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {1, "proportional allocation exactness", criterion1},
        {2, "k-shell oracle equivalence", criterion2},
        {3, "Email-Eu-core reference shell statistics", criterion3},
        {4, "diffusion exact-enumeration oracle", criterion4},
        {5, "beta-degeneracy properties", criterion5},
        {6, "Email-Eu-core identical-performance reproduction", criterion6},
        {7, "Wiki-Vote Ks-P advantage reproduction", criterion7},
        {8, "report determinism", criterion8},
        {9, "large-network headline claims (optional profile)", criterion9},
    };

    bool any_fail = false;
    for (const auto& e : entries) {
        if (only != 0 && e.id != only) continue;
        Outcome o{Outcome::fail, "unhandled"};
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o = {Outcome::fail, std::string("exception: ") + ex.what()};
        }
        const char* tag = o.status == Outcome::pass ? "[PASS]"
                          : o.status == Outcome::fail ? "[FAIL]"
                          : o.status == Outcome::skip ? "[SKIP]"
                                                      : "[INFO]";
        std::cout << tag << " criterion " << e.id << " (" << e.title << "): "
                  << o.detail << "\n";
        if (o.status == Outcome::fail) any_fail = true;
    }
    return any_fail ? 1 : 0;
}
