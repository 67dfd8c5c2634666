#include "kspread/bench.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace kspread {

namespace {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string trim(std::string_view s) {
    const char* ws = " \t\r\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

ExperimentConfig parse_bench_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip trailing comment
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::string stripped = trim(line);
        if (stripped.empty()) continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ParseError(lineno, "expected `key = value`");
        }
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (value.empty()) throw ParseError(lineno, "missing value for `" + key + "`");

        try {
            if (key == "beta") {
                cfg.sim.beta = std::stod(value);
            } else if (key == "runs" || key == "realizations") {
                cfg.sim.realizations = static_cast<std::uint32_t>(std::stoul(value));
            } else if (key == "master_seed") {
                cfg.sim.master_seed = std::stoull(value);
            } else if (key == "max_steps") {
                cfg.sim.max_steps = static_cast<std::uint32_t>(std::stoul(value));
            } else if (key == "seed_mode") {
                if (value == "fixed") cfg.seed_mode = SeedMode::fixed;
                else if (value == "proportional") cfg.seed_mode = SeedMode::proportional;
                else throw ParseError(lineno, "seed_mode must be fixed or proportional");
            } else if (key == "n") {
                cfg.fixed_n = std::stoull(value);
            } else if (key == "fraction") {
                cfg.fraction = std::stod(value);
            } else if (key == "algorithms") {
                std::replace(value.begin(), value.end(), ',', ' ');
                for (const auto& tok : split_tokens(value)) {
                    auto algo = seed_algo_from_string(tok);
                    if (!algo) throw ParseError(lineno, "unknown algorithm `" + tok + "`");
                    cfg.algorithms.push_back(*algo);
                }
            } else if (key == "dataset") {
                auto toks = split_tokens(value);
                if (toks.size() < 2) {
                    throw ParseError(lineno, "dataset needs `<name> <path>`");
                }
                std::string path = value.substr(value.find(toks[0]) + toks[0].size());
                cfg.datasets.push_back({toks[0], trim(path)});
            } else {
                throw ParseError(lineno, "unknown key `" + key + "`");
            }
        } catch (const std::invalid_argument&) {
            throw ParseError(lineno, "bad value `" + value + "` for `" + key + "`");
        } catch (const std::out_of_range&) {
            throw ParseError(lineno, "value out of range for `" + key + "`");
        }
    }
    if (!(cfg.sim.beta >= 0.0 && cfg.sim.beta <= 1.0)) {
        throw std::invalid_argument("bench config: beta must be in [0, 1]");
    }
    if (cfg.sim.realizations < 1) {
        throw std::invalid_argument("bench config: runs must be >= 1");
    }
    if (!(cfg.fraction > 0.0 && cfg.fraction <= 1.0)) {
        throw std::invalid_argument("bench config: fraction must be in (0, 1]");
    }
    if (cfg.fixed_n < 1) {
        throw std::invalid_argument("bench config: n must be >= 1");
    }
    return cfg;
}

ExperimentConfig load_bench_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    return parse_bench_config(in);
}

namespace {

std::vector<SeedAlgo> effective_algorithms(const ExperimentConfig& cfg) {
    if (!cfg.algorithms.empty()) return cfg.algorithms;
    return {std::begin(kAllSeedAlgos), std::end(kAllSeedAlgos)};
}

// Every (dataset, algorithm) block gets its own stream so realizations are
// independent across algorithms and stable under config reordering.
std::uint64_t block_seed(std::uint64_t master, const std::string& dataset,
                         const char* algo) {
    return realization_seed(master, fnv1a(dataset + "/" + algo));
}

SeedSet block_seeds(SeedAlgo algo, const Graph& g, const ShellAssignment& sa,
                    std::uint64_t n) {
    switch (algo) {
        case SeedAlgo::degree:
            return select_top_by_score(degree_centrality(g), g, n);
        case SeedAlgo::eigenvector:
            return select_top_by_score(eigenvector_centrality(g), g, n);
        case SeedAlgo::pagerank:
            return select_top_by_score(pagerank(g), g, n);
        case SeedAlgo::kshell:
            return select_kshell_baseline(sa, g, n);
        case SeedAlgo::ks_proportional:
            return select_ks_p(sa, g, n);
        case SeedAlgo::ks_half_proportional:
            return select_ks_hp(sa, g, n);
    }
    throw std::invalid_argument("unknown algorithm");
}

} // namespace

Report run_experiment(const ExperimentConfig& cfg) {
    Report rep;
    const auto algos = effective_algorithms(cfg);

    rep.metadata["tool_version"] = kToolVersion;
    rep.metadata["beta"] = format_double(cfg.sim.beta);
    rep.metadata["realizations"] = std::to_string(cfg.sim.realizations);
    rep.metadata["master_seed"] = std::to_string(cfg.sim.master_seed);
    rep.metadata["max_steps"] = std::to_string(cfg.sim.max_steps);
    rep.metadata["seed_mode"] =
        cfg.seed_mode == SeedMode::fixed ? "fixed" : "proportional";
    if (cfg.seed_mode == SeedMode::fixed) {
        rep.metadata["n"] = std::to_string(cfg.fixed_n);
    } else {
        rep.metadata["fraction"] = format_double(cfg.fraction);
    }
    {
        std::string joined;
        for (auto a : algos) {
            if (!joined.empty()) joined += ",";
            joined += seed_algo_name(a);
        }
        rep.metadata["algorithms"] = joined;
    }
    rep.metadata["pagerank_damping"] = format_double(kDefaultDamping);
    rep.metadata["iteration_tol"] = format_double(kDefaultTol);
    rep.metadata["iteration_max"] = std::to_string(kDefaultMaxIter);
    rep.metadata["preprocessing"] = "symmetrize,drop-self-loops,collapse-duplicate-edges";
    rep.metadata["tie_break"] = "score desc, degree desc, id asc";
    rep.metadata["rng"] =
        "mt19937_64; realization seed = splitmix64(block_seed, index); "
        "block_seed = splitmix64(master_seed, fnv1a(dataset/algorithm))";

    for (const auto& ds : cfg.datasets) {
        Graph g;
        try {
            g = load_edge_list(ds.path);
            if (g.node_count() == 0) {
                throw std::runtime_error("dataset has no nodes");
            }
        } catch (const std::exception& e) {
            rep.errors.push_back({ds.name, e.what()});
            continue;
        }

        const std::size_t N = g.node_count();
        std::uint64_t n_seeds;
        if (cfg.seed_mode == SeedMode::fixed) {
            n_seeds = cfg.fixed_n;
        } else {
            n_seeds = std::max<std::uint64_t>(
                1, static_cast<std::uint64_t>(std::llround(cfg.fraction * static_cast<double>(N))));
        }

        auto sa = k_shell_decompose(g);
        const std::string prefix = "dataset." + ds.name;
        rep.metadata[prefix + ".nodes"] = std::to_string(N);
        rep.metadata[prefix + ".edges"] = std::to_string(g.edge_count());
        rep.metadata[prefix + ".shells"] = std::to_string(sa.shells.size());
        rep.metadata[prefix + ".core_size"] = std::to_string(sa.shells.front().second.size());
        rep.metadata[prefix + ".core_index"] = std::to_string(sa.core_index);
        rep.metadata[prefix + ".n_seeds"] = std::to_string(std::min<std::uint64_t>(n_seeds, N));

        // one baseline per dataset block, shared by every relative coverage
        SimConfig base_cfg = cfg.sim;
        base_cfg.master_seed =
            block_seed(cfg.sim.master_seed, ds.name, seed_algo_name(SeedAlgo::kshell));
        auto base_set = select_kshell_baseline(sa, g, n_seeds);
        auto base_res = simulate_mean(g, base_set.members, base_cfg);
        if (!(base_res.mean_coverage > 0.0)) {
            throw std::logic_error("baseline coverage is zero with non-empty seeds");
        }

        for (auto algo : algos) {
            AggregateResult res;
            std::uint64_t used;
            if (algo == SeedAlgo::kshell) {
                res = base_res;
                used = base_set.members.size();
            } else {
                auto seeds = block_seeds(algo, g, sa, n_seeds);
                SimConfig sim = cfg.sim;
                sim.master_seed =
                    block_seed(cfg.sim.master_seed, ds.name, seed_algo_name(algo));
                res = simulate_mean(g, seeds.members, sim);
                used = seeds.members.size();
            }
            rep.rows.push_back({ds.name, seed_algo_name(algo), used,
                                res.mean_coverage, res.std_dev,
                                res.mean_coverage / base_res.mean_coverage});
        }
    }
    return rep;
}

namespace {

std::string emit_csv(const Report& r) {
    std::ostringstream out;
    for (const auto& [key, value] : r.metadata) {
        out << "# " << key << "=" << value << "\n";
    }
    out << "dataset,algorithm,n_seeds,mean_coverage,std,relative_coverage\n";
    for (const auto& row : r.rows) {
        out << row.dataset << ',' << row.algorithm << ',' << row.n_seeds << ','
            << format_double(row.mean_coverage) << ',' << format_double(row.std_dev)
            << ',' << format_double(row.relative_coverage) << "\n";
    }
    for (const auto& err : r.errors) {
        out << "# error: " << err.dataset << ": " << err.message << "\n";
    }
    return out.str();
}

std::string emit_json(const Report& r) {
    nlohmann::json j;
    j["metadata"] = r.metadata;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
        j["rows"].push_back({{"dataset", row.dataset},
                             {"algorithm", row.algorithm},
                             {"n_seeds", row.n_seeds},
                             {"mean_coverage", row.mean_coverage},
                             {"std", row.std_dev},
                             {"relative_coverage", row.relative_coverage}});
    }
    j["errors"] = nlohmann::json::array();
    for (const auto& err : r.errors) {
        j["errors"].push_back({{"dataset", err.dataset}, {"message", err.message}});
    }
    return j.dump(2) + "\n";
}

struct SvgScale {
    double ymax;
    double plot_h;
    double top;
    double y(double v) const { return top + plot_h * (1.0 - v / ymax); }
};

std::string emit_svg(const Report& r) {
    // group rows per dataset, preserving report order
    std::vector<std::string> datasets;
    for (const auto& row : r.rows) {
        if (std::find(datasets.begin(), datasets.end(), row.dataset) == datasets.end()) {
            datasets.push_back(row.dataset);
        }
    }
    std::vector<std::string> algos;
    for (const auto& row : r.rows) {
        if (std::find(algos.begin(), algos.end(), row.algorithm) == algos.end()) {
            algos.push_back(row.algorithm);
        }
    }
    static const char* palette[] = {"#4e79a7", "#f28e2b", "#59a14f",
                                    "#e15759", "#b07aa1", "#76b7b2"};

    double maxrel = 0.0;
    for (const auto& row : r.rows) maxrel = std::max(maxrel, row.relative_coverage);

    const double bar_w = 18, bar_gap = 4, group_gap = 28;
    const double group_w = algos.size() * (bar_w + bar_gap) + group_gap;
    const double left = 56, top = 42, plot_h = 260, bottom = 46;
    const double width = left + datasets.size() * group_w + 24;
    const double height = top + plot_h + bottom;
    SvgScale sc{std::max(1.25, maxrel * 1.15), plot_h, top};

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // legend
    double lx = left;
    for (std::size_t a = 0; a < algos.size(); ++a) {
        s << "<rect x=\"" << lx << "\" y=\"12\" width=\"10\" height=\"10\" fill=\""
          << palette[a % 6] << "\"/>\n";
        s << "<text x=\"" << lx + 14 << "\" y=\"21\">" << algos[a] << "</text>\n";
        lx += 70;
    }

    // y ticks every 0.25
    for (int tick = 0; tick * 0.25 <= sc.ymax + 1e-9; ++tick) {
        double v = tick * 0.25;
        double y = sc.y(v);
        s << "<line x1=\"" << left - 4 << "\" y1=\"" << y << "\" x2=\"" << left
          << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
        s << "<text x=\"" << left - 8 << "\" y=\"" << y + 4
          << "\" text-anchor=\"end\">" << format_double(v) << "</text>\n";
    }
    // axis + baseline gridline at 1.0
    s << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << left << "\" y1=\"" << sc.y(1.0) << "\" x2=\""
      << width - 16 << "\" y2=\"" << sc.y(1.0)
      << "\" stroke=\"#888\" stroke-dasharray=\"5,4\"/>\n";

    for (std::size_t d = 0; d < datasets.size(); ++d) {
        double gx = left + d * group_w + group_gap / 2;
        for (std::size_t a = 0; a < algos.size(); ++a) {
            const ReportRow* row = nullptr;
            for (const auto& rr : r.rows) {
                if (rr.dataset == datasets[d] && rr.algorithm == algos[a]) {
                    row = &rr;
                    break;
                }
            }
            if (!row) continue;
            double x = gx + a * (bar_w + bar_gap);
            double y = sc.y(row->relative_coverage);
            s << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << bar_w
              << "\" height=\"" << (top + plot_h - y) << "\" fill=\""
              << palette[a % 6] << "\"><title>" << datasets[d] << " "
              << algos[a] << " " << format_double(row->relative_coverage)
              << "</title></rect>\n";
        }
        s << "<text x=\"" << gx + (algos.size() * (bar_w + bar_gap)) / 2
          << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\">"
          << datasets[d] << "</text>\n";
    }
    s << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\""
      << width - 16 << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << left << "\" y=\"" << height - 10
      << "\">relative coverage vs k-shell baseline (dashed line = 1.0)</text>\n";
    s << "</svg>\n";
    return s.str();
}

} // namespace

std::string emit_report(const Report& r, ReportFormat format) {
    if (r.rows.empty() && r.errors.empty()) {
        throw std::invalid_argument("emit_report: report is empty");
    }
    switch (format) {
        case ReportFormat::csv: return emit_csv(r);
        case ReportFormat::json: return emit_json(r);
        case ReportFormat::svg_bars: return emit_svg(r);
    }
    throw std::invalid_argument("emit_report: unknown format");
}

Report parse_report_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Report r;
    for (auto it = j.at("metadata").begin(); it != j.at("metadata").end(); ++it) {
        r.metadata[it.key()] = it.value().get<std::string>();
    }
    for (const auto& row : j.at("rows")) {
        r.rows.push_back({row.at("dataset").get<std::string>(),
                          row.at("algorithm").get<std::string>(),
                          row.at("n_seeds").get<std::uint64_t>(),
                          row.at("mean_coverage").get<double>(),
                          row.at("std").get<double>(),
                          row.at("relative_coverage").get<double>()});
    }
    for (const auto& err : j.at("errors")) {
        r.errors.push_back({err.at("dataset").get<std::string>(),
                            err.at("message").get<std::string>()});
    }
    return r;
}

} // namespace kspread
