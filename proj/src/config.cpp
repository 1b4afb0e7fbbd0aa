#include "absaf/config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "absaf/errors.hpp"
#include "absaf/io.hpp"

namespace absaf {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::uint64_t to_uint(const std::string& key, const std::string& v) {
    std::uint64_t x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size())
        throw std::invalid_argument(key + ": expected a non-negative integer, got '" + v + "'");
    return x;
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument(key + ": expected a number, got '" + v + "'");
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument(key + ": expected true or false, got '" + v + "'");
}

std::vector<double> to_doubles(const std::string& key, const std::string& v) {
    std::vector<double> out;
    for (const auto& item : split(v, ',')) out.push_back(to_double(key, item));
    return out;
}

/// "1,2,5" or ranges such as "1-7".
std::vector<std::size_t> to_sizes(const std::string& key, const std::string& v) {
    std::vector<std::size_t> out;
    for (const auto& item : split(v, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) {
            out.push_back(to_uint(key, item));
            continue;
        }
        auto lo = to_uint(key, trim(item.substr(0, dash)));
        auto hi = to_uint(key, trim(item.substr(dash + 1)));
        if (hi < lo) throw std::invalid_argument(key + ": empty range '" + item + "'");
        for (auto x = lo; x <= hi; ++x) out.push_back(x);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> to_buckets(const std::string& key, const std::string& v) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& item : split(v, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw std::invalid_argument(key + ": expected lo-hi, got '" + item + "'");
        out.emplace_back(to_uint(key, trim(item.substr(0, dash))), to_uint(key, trim(item.substr(dash + 1))));
    }
    return out;
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    return out.str();
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "instances",      "na_min",      "na_max",         "p_cycle",      "attachment",  "prf_min",
        "prf_max",        "max_tries",   "truths",         "per_truth",    "phi",         "absafs_per_phi",
        "k",              "rules",       "strategies",     "mode",         "timeout",     "max_combinations",
        "jr_audit",       "perf_buckets", "perf_instances", "perf_voters", "perf_phi",    "seed",
        "threads",        "out_dir"};
    return keys;
}

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& raw) {
    const auto v = trim(raw);
    if (key == "instances") cfg.instances = to_uint(key, v);
    else if (key == "na_min") cfg.na_min = to_uint(key, v);
    else if (key == "na_max") cfg.na_max = to_uint(key, v);
    else if (key == "p_cycle") cfg.p_cycle = to_doubles(key, v);
    else if (key == "attachment") cfg.attachment = to_uint(key, v);
    else if (key == "prf_min") cfg.prf_min = to_uint(key, v);
    else if (key == "prf_max") cfg.prf_max = to_uint(key, v);
    else if (key == "max_tries") cfg.max_tries = to_uint(key, v);
    else if (key == "truths") cfg.truths = to_uint(key, v);
    else if (key == "per_truth") cfg.per_truth = to_uint(key, v);
    else if (key == "phi") cfg.phi = to_doubles(key, v);
    else if (key == "absafs_per_phi") cfg.absafs_per_phi = to_uint(key, v);
    else if (key == "k") cfg.k = to_sizes(key, v);
    else if (key == "rules") {
        // custom weight vectors contain commas, so lists holding one are ';'-separated
        cfg.rules = split(v, v.find("owa:") != std::string::npos ? ';' : ',');
        for (const auto& r : cfg.rules) parse_rule(r);
    } else if (key == "strategies") {
        cfg.strategies.clear();
        for (const auto& s : split(v, ',')) cfg.strategies.push_back(parse_strategy(s));
    } else if (key == "mode") cfg.mode = parse_rep_mode(v);
    else if (key == "timeout") cfg.timeout = to_double(key, v);
    else if (key == "max_combinations") cfg.max_combinations = to_uint(key, v);
    else if (key == "jr_audit") cfg.jr_audit = to_bool(key, v);
    else if (key == "perf_buckets") cfg.perf_buckets = to_buckets(key, v);
    else if (key == "perf_instances") cfg.perf_instances = to_uint(key, v);
    else if (key == "perf_voters") cfg.perf_voters = to_uint(key, v);
    else if (key == "perf_phi") cfg.perf_phi = to_doubles(key, v);
    else if (key == "seed") cfg.seed = to_uint(key, v);
    else if (key == "threads") cfg.threads = to_uint(key, v);
    else if (key == "out_dir") cfg.out_dir = v;
    else throw std::invalid_argument("unknown config key '" + key + "'");
}

void ExperimentConfig::validate() const {
    auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
    if (instances == 0) fail("instances must be positive");
    if (na_min < 2 || na_max < na_min) fail("na_min..na_max must be a range with na_min >= 2");
    if (p_cycle.empty()) fail("p_cycle must not be empty");
    for (auto p : p_cycle)
        if (!(p >= 0 && p <= 1)) fail("p_cycle values must lie in [0,1]");
    if (attachment < 1 || attachment >= na_min) fail("attachment must lie in 1..na_min-1");
    if (prf_min < 1 || prf_max < prf_min) fail("prf_min..prf_max must be a range with prf_min >= 1");
    if (truths < 1 || truths > prf_min) fail("truths must lie in 1..prf_min");
    if (per_truth < 1) fail("per_truth must be positive");
    if (phi.empty() || perf_phi.empty()) fail("phi grids must not be empty");
    for (auto p : phi)
        if (!(p >= 0 && p <= 1)) fail("phi values must lie in [0,1]");
    for (auto p : perf_phi)
        if (!(p >= 0 && p <= 1)) fail("perf_phi values must lie in [0,1]");
    if (absafs_per_phi < 1) fail("absafs_per_phi must be positive");
    if (k.empty()) fail("k must not be empty");
    for (auto x : k)
        if (x < 1) fail("k values must be at least 1");
    if (rules.empty()) fail("rules must not be empty");
    if (strategies.empty()) fail("strategies must not be empty");
    if (!(timeout > 0)) fail("timeout must be positive");
    for (auto [lo, hi] : perf_buckets)
        if (lo < 4 || hi < lo) fail("perf buckets need 4 <= lo <= hi");
    if (perf_voters < 1) fail("perf_voters must be positive");
    if (max_tries < 1) fail("max_tries must be positive");
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["instances"] = instances;
    j["na_min"] = na_min;
    j["na_max"] = na_max;
    j["p_cycle"] = p_cycle;
    j["attachment"] = attachment;
    j["prf_min"] = prf_min;
    j["prf_max"] = prf_max;
    j["max_tries"] = max_tries;
    j["truths"] = truths;
    j["per_truth"] = per_truth;
    j["phi"] = phi;
    j["absafs_per_phi"] = absafs_per_phi;
    j["k"] = k;
    j["rules"] = rules;
    std::vector<std::string> st;
    for (auto s : strategies) st.push_back(to_string(s));
    j["strategies"] = st;
    j["mode"] = to_string(mode);
    j["timeout"] = timeout;
    j["max_combinations"] = max_combinations;
    j["jr_audit"] = jr_audit;
    std::vector<std::string> buckets;
    for (auto [lo, hi] : perf_buckets) buckets.push_back(std::to_string(lo) + "-" + std::to_string(hi));
    j["perf_buckets"] = buckets;
    j["perf_instances"] = perf_instances;
    j["perf_voters"] = perf_voters;
    j["perf_phi"] = perf_phi;
    j["seed"] = seed;
    j["threads"] = threads;
    j["out_dir"] = out_dir;
    return j;
}

ExperimentConfig paper_scale_config() {
    ExperimentConfig cfg;
    cfg.instances = 50;
    cfg.truths = 5;
    cfg.per_truth = 20;
    cfg.phi = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    cfg.absafs_per_phi = 5;
    cfg.k = {1, 2, 3, 4, 5, 6, 7};
    cfg.perf_buckets = {{8, 12}, {13, 17}, {18, 22}, {23, 27}, {28, 32}};
    cfg.perf_instances = 30;
    return cfg;
}

ExperimentConfig parse_config(const std::string& text, ExperimentConfig base) {
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(no, "expected key = value");
        try {
            apply_setting(base, trim(line.substr(0, eq)), line.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
            throw ParseError(no, e.what());
        }
    }
    return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
    return parse_config(read_file(path), std::move(base));
}

}  // namespace absaf
