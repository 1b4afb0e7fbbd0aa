#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "absaf/model.hpp"
#include "absaf/rules.hpp"

namespace absaf {

/// Everything a CSV-emitting experiment run needs. Defaults are the desk-scale suite.
struct ExperimentConfig {
    // attack-graph generation
    std::size_t instances = 10;
    std::size_t na_min = 10;
    std::size_t na_max = 50;
    std::vector<double> p_cycle = {0.25, 0.5, 0.75};
    std::size_t attachment = 1;
    std::size_t prf_min = 10;
    std::size_t prf_max = 10;
    std::size_t max_tries = 200'000;

    // electorates
    std::size_t truths = 3;
    std::size_t per_truth = 10;
    std::vector<double> phi = {0.0, 0.25, 0.5, 0.75, 1.0};
    std::size_t absafs_per_phi = 1;

    // selection
    std::vector<std::size_t> k = {1, 2, 3, 4, 5};
    std::vector<std::string> rules = {"utilitarian", "egalitarian", "harmonic", "maxcov"};
    std::vector<Strategy> strategies = {Strategy::exact, Strategy::greedy};
    RepMode mode = RepMode::regular;
    double timeout = 45.0;
    /// Exact searches above this many combinations are refused (status cap). The default
    /// is high enough that the timeout decides.
    std::uint64_t max_combinations = 1'000'000'000'000;
    bool jr_audit = true;

    // performance table
    std::vector<std::pair<std::size_t, std::size_t>> perf_buckets = {{8, 12},  {13, 17}, {18, 22}, {23, 27},
                                                                     {28, 32}, {33, 37}, {38, 42}};
    std::size_t perf_instances = 5;
    std::size_t perf_voters = 100;
    std::vector<double> perf_phi = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

    std::uint64_t seed = 1;
    /// Worker threads; 0 picks the hardware concurrency.
    std::size_t threads = 0;
    std::string out_dir = "results";

    /// Throws std::invalid_argument naming the offending key.
    void validate() const;
    nlohmann::json to_json() const;
};

/// Full-scale generation: 50 AFs with 10 preferred
/// extensions, 5 truths of 20 ballots, 11 dispersion values, 5 electorates per value.
ExperimentConfig paper_scale_config();

/// Sets one key from its text form. Throws std::invalid_argument for an unknown key or
/// a malformed value.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// `key = value` lines; `#` starts a comment. Unknown keys are errors (ParseError with line).
ExperimentConfig parse_config(const std::string& text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

/// Names accepted by apply_setting.
const std::vector<std::string>& config_keys();

}  // namespace absaf
