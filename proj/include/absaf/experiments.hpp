#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "absaf/config.hpp"
#include "absaf/generators.hpp"

namespace absaf {

/// One CSV line. Metric fields are empty when the solve did not finish.
struct MetricsRow {
    std::string instance_id;
    double phi = 0;
    std::size_t k = 0;
    std::string rule;
    std::string strategy;
    std::string mode;
    std::optional<double> avg_rep, min_rep, recovery, coverage_fraction, objective;
    double runtime_ms = 0;
    /// ok, timeout, cap (combination cap refused the exact search), or partial in summaries.
    std::string status = "ok";
    /// holds / violated when the JR audit ran, empty otherwise.
    std::string jr;
};

inline constexpr const char* csv_version_line = "# absaf-csv v1";
extern const std::vector<std::string> csv_columns;

std::string to_csv(const std::vector<MetricsRow>& rows);
/// Inverse of to_csv. Throws ParseError on a missing version line or malformed rows.
std::vector<MetricsRow> parse_csv(const std::string& text);
/// to_csv with the runtime column blanked; equal for equal configs.
std::string determinism_view(const std::vector<MetricsRow>& rows);

/// A filtered attack graph and its preferred extensions.
struct GeneratedAF {
    std::size_t index = 0;
    AF af;
    std::vector<ArgSet> prf;
    GenParams params;
    std::size_t attempts = 0;
};

/// Stream families for generate_af: the rule suites share one, the performance table uses another.
inline constexpr std::uint64_t family_suite = 1;
inline constexpr std::uint64_t family_perf = 2;

/// Instance `index` of the family `family`: graphs are drawn with n_args uniform in
/// [na_min, na_max] and p_cycle uniform from the configured set until the number of
/// preferred extensions lies in [lo, hi]. Depends only on (seed, family, index).
GeneratedAF generate_af(const ExperimentConfig& cfg, std::uint64_t family, std::size_t index, std::size_t lo,
                        std::size_t hi);

struct Electorate {
    GeneratedElection election;
    /// Ground truths as indices into the extension list.
    std::vector<std::size_t> truth_indices;
    double phi = 0;
    std::uint64_t seed = 0;
};

/// Electorate `replicate` for graph `g` at cfg.phi[phi_index]: cfg.truths ground truths,
/// cfg.per_truth ballots each.
Electorate make_electorate(const ExperimentConfig& cfg, const GeneratedAF& g, std::size_t phi_index,
                           std::size_t replicate);

/// Row for one selected outcome. `indices` refer to profile extensions.
MetricsRow measure(const ScoreProfile& p, const std::vector<std::size_t>& indices,
                   const std::vector<std::size_t>& truth_indices, bool jr_audit);

struct ApproxCell {
    double phi = 0;
    std::size_t k = 0;
    std::string rule;
    std::size_t pairs = 0;
    double mean_ratio = 1;
    double min_ratio = 1;
};

struct PerfBucket {
    std::size_t lo = 0, hi = 0;
    std::size_t instances = 0;
    std::size_t exact_ok = 0, greedy_ok = 0;
    std::optional<double> exact_mean_s, greedy_mean_s;
};

struct RunResult {
    std::string name;
    std::vector<MetricsRow> rows;
    /// Rows averaged over instances, instance_id "mean".
    std::vector<MetricsRow> summary;
    std::vector<ApproxCell> approx;
    std::vector<PerfBucket> perf;
    nlohmann::json manifest;
};

/// Utilitarian-style sweeps over every configured k, rule and strategy.
RunResult run_varying_k(const ExperimentConfig& cfg);
/// Rules plus the random_k, all_truths and all_prf baselines.
RunResult run_metrics(const ExperimentConfig& cfg);
/// Exact and greedy rows for every rule, with greedy/exact objective ratios per (phi, k, rule).
RunResult run_greedy_approx(const ExperimentConfig& cfg);
/// Exact and greedy Utilitarian with k = floor(m/4) on graphs bucketed by extension count.
RunResult run_performance(const ExperimentConfig& cfg);

/// Writes <name>.csv, <name>_summary.csv, any ratio or bucket table, and merges the run
/// into <out_dir>/manifest.json under its name.
void write_outputs(const RunResult& result, const std::string& out_dir);

std::string approx_table_csv(const std::vector<ApproxCell>& cells);
std::string perf_table_csv(const std::vector<PerfBucket>& buckets);

}  // namespace absaf
