#pragma once

#include "kspread/diffusion.hpp"
#include "kspread/seeding.hpp"

#include <map>

namespace kspread {

inline constexpr const char* kToolVersion = "0.1.0";

struct DatasetSpec {
    std::string name;
    std::string path;
};

enum class SeedMode { fixed, proportional };

struct ExperimentConfig {
    std::vector<DatasetSpec> datasets;
    SeedMode seed_mode = SeedMode::proportional;
    std::uint64_t fixed_n = 100;     // seed_mode == fixed
    double fraction = 0.10;          // seed_mode == proportional; n = round(fraction * N), min 1
    SimConfig sim;
    std::vector<SeedAlgo> algorithms; // empty means all six
};

struct ReportRow {
    std::string dataset;
    std::string algorithm;
    std::uint64_t n_seeds = 0;
    double mean_coverage = 0.0;
    double std_dev = 0.0;
    double relative_coverage = 0.0;  // mean / k-shell baseline mean, same config
    bool operator==(const ReportRow&) const = default;
};

struct DatasetError {
    std::string dataset;
    std::string message;
    bool operator==(const DatasetError&) const = default;
};

struct Report {
    std::vector<ReportRow> rows;
    std::vector<DatasetError> errors;
    std::map<std::string, std::string> metadata;
    bool operator==(const Report&) const = default;
};

enum class ReportFormat { csv, json, svg_bars };

/// Plain key-value config (documented in the README): `beta = 0.09`,
/// `seed_mode = proportional`, one `dataset = <name> <path>` line per dataset.
ExperimentConfig parse_bench_config(std::istream& in);
ExperimentConfig load_bench_config(const std::filesystem::path& file);

/// parse -> decompose -> score -> select -> simulate for every dataset, all
/// relative to the k-shell baseline computed once per dataset under the same
/// config. An unreadable dataset becomes an error entry and the run continues.
/// Fully deterministic for a fixed master seed.
Report run_experiment(const ExperimentConfig& cfg);

/// csv and json losslessly encode rows, errors and metadata; svg_bars renders
/// one group of bars per dataset with the baseline gridline at 1.0. A report
/// with no rows and no errors is refused.
std::string emit_report(const Report& r, ReportFormat format);
Report parse_report_json(const std::string& text);

} // namespace kspread
