#include "absaf/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>
#include <thread>

#include "absaf/axioms.hpp"
#include "absaf/errors.hpp"
#include "absaf/io.hpp"
#include "absaf/rules.hpp"

namespace absaf {

const std::vector<std::string> csv_columns = {"instance_id", "phi",      "k",         "rule",
                                              "strategy",    "mode",     "avg_rep",   "min_rep",
                                              "recovery",    "coverage_fraction", "objective", "runtime_ms",
                                              "status",      "jr"};

namespace {

// Seed families keep the streams of different experiments apart.
constexpr std::uint64_t family_electorate = 3;
constexpr std::uint64_t family_baseline = 4;

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string opt(const std::optional<double>& x) { return x ? num(*x) : std::string(); }

std::string quoted(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (in_quotes) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                in_quotes = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string csv_body(const std::vector<MetricsRow>& rows, bool with_runtime) {
    std::ostringstream out;
    out << csv_version_line << '\n';
    for (std::size_t c = 0; c < csv_columns.size(); ++c) out << (c ? "," : "") << csv_columns[c];
    out << '\n';
    for (const auto& r : rows) {
        char rt[32];
        std::snprintf(rt, sizeof rt, "%.3f", r.runtime_ms);
        out << quoted(r.instance_id) << ',' << num(r.phi) << ',' << r.k << ',' << quoted(r.rule) << ',' << r.strategy
            << ',' << r.mode << ',' << opt(r.avg_rep) << ',' << opt(r.min_rep) << ',' << opt(r.recovery) << ','
            << opt(r.coverage_fraction) << ',' << opt(r.objective) << ',' << (with_runtime ? rt : "") << ','
            << r.status << ',' << r.jr << '\n';
    }
    return out.str();
}

bool id_less(const std::string& a, const std::string& b) {
    auto numeric = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (numeric(a) && numeric(b)) {
        if (a.size() != b.size()) return a.size() < b.size();
    }
    return a < b;
}

void sort_rows(std::vector<MetricsRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const MetricsRow& a, const MetricsRow& b) {
        if (a.instance_id != b.instance_id) return id_less(a.instance_id, b.instance_id);
        if (a.phi != b.phi) return a.phi < b.phi;
        if (a.k != b.k) return a.k < b.k;
        if (a.rule != b.rule) return a.rule < b.rule;
        return a.strategy < b.strategy;
    });
}

std::size_t worker_count(const ExperimentConfig& cfg, std::size_t tasks) {
    std::size_t t = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    return std::max<std::size_t>(1, std::min(t, tasks));
}

/// Runs task(i) for i in [0, n) on a pool of workers. Results travel over a channel to the
/// calling thread, which is the only one writing into the output vector.
template <class R>
std::vector<R> run_pool(std::size_t n, std::size_t workers, const std::function<R(std::size_t)>& task) {
    std::mutex mu;
    std::condition_variable ready;
    std::queue<std::pair<std::size_t, R>> channel;
    std::exception_ptr failure;
    std::size_t next = 0;

    auto work = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard lock(mu);
                if (next >= n || failure) return;
                i = next++;
            }
            try {
                R r = task(i);
                std::lock_guard lock(mu);
                channel.emplace(i, std::move(r));
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
            }
            ready.notify_one();
        }
    };

    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);

    std::vector<std::optional<R>> slots(n);
    std::size_t received = 0;
    {
        std::unique_lock lock(mu);
        while (received < n && !failure) {
            ready.wait(lock, [&] { return !channel.empty() || failure; });
            while (!channel.empty()) {
                slots[channel.front().first] = std::move(channel.front().second);
                channel.pop();
                ++received;
            }
        }
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    std::vector<R> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

SearchLimits limits_for(const ExperimentConfig& cfg) {
    auto l = SearchLimits::with_timeout(std::chrono::duration<double>(cfg.timeout));
    l.max_combinations = cfg.max_combinations;
    return l;
}

struct Solved {
    MetricsRow row;
    std::optional<mpq_class> objective;
};

Solved solve_row(const ScoreProfile& p, const Electorate& e, std::size_t k, const std::string& name, Strategy st,
                 const ExperimentConfig& cfg) {
    auto rule = parse_rule(name);
    rule.strategy = st;
    rule.mode = cfg.mode;
    if (rule.kind == RuleKind::custom_owa && rule.custom_weights.size() < p.voters())
        rule.custom_weights.resize(p.voters(), 0);  // shorter custom vectors are padded with zeros
    Solved out;
    const auto t0 = Clock::now();
    try {
        auto sel = solve(p, k, rule, limits_for(cfg));
        out.row = measure(p, sel.indices, e.truth_indices, cfg.jr_audit);
        out.row.objective = sel.objective.get_d();
        out.objective = sel.objective;
    } catch (const TimeoutError&) {
        out.row.status = "timeout";
    } catch (const ResourceLimitError&) {
        out.row.status = "cap";
    }
    out.row.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    out.row.phi = e.phi;
    out.row.k = k;
    out.row.rule = name;
    out.row.strategy = to_string(rule.strategy);
    out.row.mode = to_string(rule.mode);
    return out;
}

nlohmann::json af_info(const GeneratedAF& g) {
    return {{"index", g.index},          {"n_args", g.params.n_args}, {"p_cycle", g.params.p_cycle},
            {"attachment", g.params.attachment}, {"seed", g.params.seed}, {"attempts", g.attempts},
            {"extensions", g.prf.size()}};
}

nlohmann::json electorate_info(const std::string& id, const Electorate& e) {
    return {{"instance_id", id}, {"phi", e.phi}, {"seed", e.seed}, {"truths", e.truth_indices},
            {"voters", e.election.absaf.voter_count()}};
}

struct TaskOutput {
    std::vector<MetricsRow> rows;
    nlohmann::json info;
    // greedy/exact objective ratios keyed by (phi, k, rule)
    std::vector<std::tuple<double, std::size_t, std::string, double>> ratios;
};

std::string instance_id(const ExperimentConfig& cfg, std::size_t af_index, std::size_t replicate) {
    return std::to_string(af_index * cfg.absafs_per_phi + replicate);
}

/// Calls body(id, electorate, profile) for every electorate of one generated graph.
void for_each_electorate(const ExperimentConfig& cfg, const GeneratedAF& g, nlohmann::json& info,
                         const std::function<void(const std::string&, const Electorate&, const ScoreProfile&)>& body) {
    info["af"] = af_info(g);
    info["electorates"] = nlohmann::json::array();
    for (std::size_t ph = 0; ph < cfg.phi.size(); ++ph)
        for (std::size_t rep = 0; rep < cfg.absafs_per_phi; ++rep) {
            auto e = make_electorate(cfg, g, ph, rep);
            auto id = instance_id(cfg, g.index, rep);
            info["electorates"].push_back(electorate_info(id, e));
            ScoreProfile p(e.election.absaf, g.prf, cfg.mode);
            body(id, e, p);
        }
}

std::vector<MetricsRow> summarize(const std::vector<MetricsRow>& rows) {
    using Key = std::tuple<double, std::size_t, std::string, std::string, std::string>;
    struct Acc {
        std::size_t total = 0, ok = 0, jr_checked = 0, jr_violated = 0;
        double avg = 0, min = 0, rec = 0, cov = 0, obj = 0, rt = 0;
        bool has_obj = true;
    };
    std::map<Key, Acc> groups;
    for (const auto& r : rows) {
        auto& a = groups[{r.phi, r.k, r.rule, r.strategy, r.mode}];
        ++a.total;
        a.rt += r.runtime_ms;
        if (!r.jr.empty()) {
            ++a.jr_checked;
            a.jr_violated += r.jr == "violated";
        }
        if (r.status != "ok") continue;
        ++a.ok;
        a.avg += *r.avg_rep;
        a.min += *r.min_rep;
        a.rec += *r.recovery;
        a.cov += *r.coverage_fraction;
        if (r.objective) a.obj += *r.objective;
        else a.has_obj = false;
    }
    std::vector<MetricsRow> out;
    for (const auto& [key, a] : groups) {
        MetricsRow s;
        s.instance_id = "mean";
        std::tie(s.phi, s.k, s.rule, s.strategy, s.mode) = key;
        s.runtime_ms = a.rt / static_cast<double>(a.total);
        s.status = a.ok == a.total ? "ok" : a.ok == 0 ? "failed" : "partial";
        if (a.ok > 0) {
            const double n = static_cast<double>(a.ok);
            s.avg_rep = a.avg / n;
            s.min_rep = a.min / n;
            s.recovery = a.rec / n;
            s.coverage_fraction = a.cov / n;
            if (a.has_obj) s.objective = a.obj / n;
        }
        if (a.jr_checked) s.jr = a.jr_violated ? "violated" : "holds";
        out.push_back(std::move(s));
    }
    return out;
}

RunResult assemble(const std::string& name, const ExperimentConfig& cfg, std::vector<TaskOutput> outputs) {
    RunResult res;
    res.name = name;
    res.manifest["config"] = cfg.to_json();
    res.manifest["csv_version"] = csv_version_line;
    res.manifest["instances"] = nlohmann::json::array();
    for (auto& o : outputs) {
        res.manifest["instances"].push_back(std::move(o.info));
        for (auto& r : o.rows) res.rows.push_back(std::move(r));
    }
    sort_rows(res.rows);
    res.summary = summarize(res.rows);
    return res;
}

}  // namespace

std::string to_csv(const std::vector<MetricsRow>& rows) { return csv_body(rows, true); }

std::string determinism_view(const std::vector<MetricsRow>& rows) { return csv_body(rows, false); }

std::vector<MetricsRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    };
    if (!next_line() || line != csv_version_line) throw ParseError(1, "missing '# absaf-csv v1' version line");
    if (!next_line() || split_csv_line(line) != csv_columns) throw ParseError(no, "unexpected column header");
    std::vector<MetricsRow> rows;
    while (next_line()) {
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        if (f.size() != csv_columns.size()) throw ParseError(no, "expected 14 fields");
        auto num_or = [&](const std::string& s) -> std::optional<double> {
            if (s.empty()) return std::nullopt;
            try {
                return std::stod(s);
            } catch (const std::exception&) {
                throw ParseError(no, "bad number '" + s + "'");
            }
        };
        MetricsRow r;
        r.instance_id = f[0];
        r.phi = num_or(f[1]).value_or(0);
        r.k = static_cast<std::size_t>(num_or(f[2]).value_or(0));
        r.rule = f[3];
        r.strategy = f[4];
        r.mode = f[5];
        r.avg_rep = num_or(f[6]);
        r.min_rep = num_or(f[7]);
        r.recovery = num_or(f[8]);
        r.coverage_fraction = num_or(f[9]);
        r.objective = num_or(f[10]);
        r.runtime_ms = num_or(f[11]).value_or(0);
        r.status = f[12];
        r.jr = f[13];
        rows.push_back(std::move(r));
    }
    return rows;
}

GeneratedAF generate_af(const ExperimentConfig& cfg, std::uint64_t family, std::size_t index, std::size_t lo,
                        std::size_t hi) {
    const Rng stream = Rng(cfg.seed).child(family).child(index);
    // Enumeration is cut short well above the window; such graphs are rejected anyway.
    EnumerationLimits limits;
    limits.max_extensions = std::max<std::size_t>(64, 8 * hi);
    limits.max_nodes = 200'000;

    GeneratedAF g;
    g.index = index;
    for (std::size_t attempt = 0; attempt < cfg.max_tries; ++attempt) {
        Rng draw = stream.child(attempt);
        GenParams params;
        params.n_args = cfg.na_min + draw.uniform_index(cfg.na_max - cfg.na_min + 1);
        params.p_cycle = cfg.p_cycle[draw.uniform_index(cfg.p_cycle.size())];
        params.attachment = std::min(cfg.attachment, params.n_args - 1);
        params.seed = draw.next();
        auto af = gen_af(params);
        std::vector<ArgSet> prf;
        try {
            prf = preferred_extensions(af, limits);
        } catch (const ResourceLimitError&) {
            continue;
        }
        if (prf.size() < lo || prf.size() > hi) continue;
        if (std::any_of(prf.begin(), prf.end(), [](const ArgSet& e) { return e.empty(); })) continue;
        g.af = std::move(af);
        g.prf = std::move(prf);
        g.params = params;
        g.attempts = attempt + 1;
        return g;
    }
    throw ResourceLimitError("no graph with " + std::to_string(lo) + ".." + std::to_string(hi) +
                             " preferred extensions after " + std::to_string(cfg.max_tries) + " attempts");
}

Electorate make_electorate(const ExperimentConfig& cfg, const GeneratedAF& g, std::size_t phi_index,
                           std::size_t replicate) {
    Rng stream = Rng(cfg.seed).child(family_electorate).child(g.index).child(phi_index).child(replicate);
    Rng truth_rng = stream.child(0);
    Electorate e;
    e.truth_indices = sample_ground_truths(g.prf.size(), cfg.truths, truth_rng);
    e.phi = cfg.phi.at(phi_index);
    e.seed = stream.child(1).next();
    std::vector<ArgSet> truths;
    for (auto t : e.truth_indices) truths.push_back(g.prf[t]);
    e.election = build_absaf(g.af, truths, cfg.per_truth, e.phi, e.seed);
    return e;
}

MetricsRow measure(const ScoreProfile& p, const std::vector<std::size_t>& indices,
                   const std::vector<std::size_t>& truth_indices, bool jr_audit) {
    const auto n = p.voters();
    mpq_class sum = 0;
    std::uint32_t lowest = UINT32_MAX;
    std::size_t covered = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::uint32_t best = 0;
        for (auto e : indices) best = std::max(best, p.rank(v, e));
        sum += p.values()[best].to_mpq();
        lowest = std::min(lowest, best);
        covered += best == p.one_rank();
    }
    MetricsRow r;
    r.avg_rep = mpq_class(sum / static_cast<unsigned long>(n)).get_d();
    r.min_rep = p.values()[lowest].to_double();
    r.coverage_fraction = static_cast<double>(covered) / static_cast<double>(n);
    std::size_t hits = 0;
    for (auto e : indices) hits += std::count(truth_indices.begin(), truth_indices.end(), e) > 0;
    r.recovery = static_cast<double>(hits) / static_cast<double>(indices.size());
    if (jr_audit) r.jr = check_jr(p, indices).holds ? "holds" : "violated";
    return r;
}

RunResult run_varying_k(const ExperimentConfig& cfg) {
    cfg.validate();
    auto outputs = run_pool<TaskOutput>(cfg.instances, worker_count(cfg, cfg.instances), [&](std::size_t i) {
        TaskOutput out;
        auto g = generate_af(cfg, family_suite, i, cfg.prf_min, cfg.prf_max);
        for_each_electorate(cfg, g, out.info, [&](const std::string& id, const Electorate& e, const ScoreProfile& p) {
            for (auto k : cfg.k)
                for (const auto& name : cfg.rules)
                    for (auto st : cfg.strategies) {
                        auto s = solve_row(p, e, k, name, st, cfg);
                        s.row.instance_id = id;
                        out.rows.push_back(std::move(s.row));
                    }
        });
        return out;
    });
    return assemble("vary_k", cfg, std::move(outputs));
}

namespace {

struct BaselineAcc {
    mpq_class avg = 0, min = 0, rec = 0, cov = 0;
    std::size_t draws = 0;
    void add(const MetricsRow& r) {
        avg += mpq_class(*r.avg_rep);
        min += mpq_class(*r.min_rep);
        rec += mpq_class(*r.recovery);
        cov += mpq_class(*r.coverage_fraction);
        ++draws;
    }
};

/// Expected metrics of k extensions picked uniformly at random: the exact mean over all
/// k-subsets when there are at most `exact_limit` of them, otherwise a sampled mean.
MetricsRow random_k_baseline(const ScoreProfile& p, std::size_t k, const std::vector<std::size_t>& truths,
                             Rng rng) {
    constexpr std::uint64_t exact_limit = 5000;
    constexpr std::size_t samples = 2000;
    const auto m = p.extensions();
    const auto size = std::min(k, m);
    BaselineAcc acc;
    if (binomial(m, size) <= exact_limit) {
        std::vector<std::size_t> comb(size);
        std::iota(comb.begin(), comb.end(), 0);
        for (;;) {
            acc.add(measure(p, comb, truths, false));
            std::size_t i = size;
            while (i > 0 && comb[i - 1] == m - size + i - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    } else {
        std::vector<std::size_t> pool(m);
        for (std::size_t s = 0; s < samples; ++s) {
            std::iota(pool.begin(), pool.end(), 0);
            for (std::size_t j = 0; j < size; ++j) std::swap(pool[j], pool[j + rng.uniform_index(m - j)]);
            std::vector<std::size_t> pick(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
            acc.add(measure(p, pick, truths, false));
        }
    }
    MetricsRow r;
    const mpq_class d(static_cast<unsigned long>(acc.draws));
    r.avg_rep = mpq_class(acc.avg / d).get_d();
    r.min_rep = mpq_class(acc.min / d).get_d();
    r.recovery = mpq_class(acc.rec / d).get_d();
    r.coverage_fraction = mpq_class(acc.cov / d).get_d();
    return r;
}

}  // namespace

RunResult run_metrics(const ExperimentConfig& cfg) {
    cfg.validate();
    auto outputs = run_pool<TaskOutput>(cfg.instances, worker_count(cfg, cfg.instances), [&](std::size_t i) {
        TaskOutput out;
        auto g = generate_af(cfg, family_suite, i, cfg.prf_min, cfg.prf_max);
        for_each_electorate(cfg, g, out.info, [&](const std::string& id, const Electorate& e, const ScoreProfile& p) {
            auto tag = [&](MetricsRow r, const std::string& rule, std::size_t k) {
                r.instance_id = id;
                r.phi = e.phi;
                r.k = k;
                r.rule = rule;
                r.strategy = "baseline";
                r.mode = to_string(cfg.mode);
                out.rows.push_back(std::move(r));
            };
            for (auto k : cfg.k) {
                for (const auto& name : cfg.rules)
                    for (auto st : cfg.strategies) {
                        auto s = solve_row(p, e, k, name, st, cfg);
                        s.row.instance_id = id;
                        out.rows.push_back(std::move(s.row));
                    }
                Rng rng = Rng(e.seed).child(family_baseline).child(k);
                tag(random_k_baseline(p, k, e.truth_indices, rng), "random_k", k);
            }
            tag(measure(p, e.truth_indices, e.truth_indices, cfg.jr_audit), "all_truths", e.truth_indices.size());
            std::vector<std::size_t> all(p.extensions());
            std::iota(all.begin(), all.end(), 0);
            tag(measure(p, all, e.truth_indices, cfg.jr_audit), "all_prf", all.size());
        });
        return out;
    });
    return assemble("metrics", cfg, std::move(outputs));
}

RunResult run_greedy_approx(const ExperimentConfig& cfg) {
    cfg.validate();
    auto outputs = run_pool<TaskOutput>(cfg.instances, worker_count(cfg, cfg.instances), [&](std::size_t i) {
        TaskOutput out;
        auto g = generate_af(cfg, family_suite, i, cfg.prf_min, cfg.prf_max);
        for_each_electorate(cfg, g, out.info, [&](const std::string& id, const Electorate& e, const ScoreProfile& p) {
            for (auto k : cfg.k)
                for (const auto& name : cfg.rules) {
                    auto exact = solve_row(p, e, k, name, Strategy::exact, cfg);
                    auto greedy = solve_row(p, e, k, name, Strategy::greedy, cfg);
                    if (exact.objective && greedy.objective) {
                        // both objectives are zero only when every outcome scores zero
                        double ratio =
                            *exact.objective == 0 ? 1.0 : mpq_class(*greedy.objective / *exact.objective).get_d();
                        out.ratios.emplace_back(e.phi, k, exact.row.rule, ratio);
                    }
                    exact.row.instance_id = greedy.row.instance_id = id;
                    out.rows.push_back(std::move(exact.row));
                    out.rows.push_back(std::move(greedy.row));
                }
        });
        return out;
    });

    std::map<std::tuple<double, std::size_t, std::string>, std::vector<double>> cells;
    for (const auto& o : outputs)
        for (const auto& [phi, k, rule, ratio] : o.ratios) cells[{phi, k, rule}].push_back(ratio);
    auto res = assemble("greedy_approx", cfg, std::move(outputs));
    for (const auto& [key, ratios] : cells) {
        ApproxCell c;
        std::tie(c.phi, c.k, c.rule) = key;
        c.pairs = ratios.size();
        c.mean_ratio = std::accumulate(ratios.begin(), ratios.end(), 0.0) / static_cast<double>(ratios.size());
        c.min_ratio = *std::min_element(ratios.begin(), ratios.end());
        res.approx.push_back(c);
    }
    return res;
}

RunResult run_performance(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto per_bucket = cfg.perf_instances;
    const auto tasks = cfg.perf_buckets.size() * per_bucket;
    auto outputs = run_pool<TaskOutput>(tasks, worker_count(cfg, tasks), [&](std::size_t t) {
        TaskOutput out;
        const auto b = t / per_bucket;
        const auto [lo, hi] = cfg.perf_buckets[b];
        auto g = generate_af(cfg, family_perf, t, lo, hi);
        const auto m = g.prf.size();
        const auto k = std::max<std::size_t>(1, m / 4);

        Rng stream = Rng(cfg.seed).child(family_perf).child(t).child(UINT64_MAX);
        Electorate e;
        e.phi = cfg.perf_phi[stream.uniform_index(cfg.perf_phi.size())];
        e.truth_indices = sample_ground_truths(m, k, stream);
        e.seed = stream.next();
        // exactly perf_voters voters: equal quotas, the last truth absorbs the remainder
        std::vector<std::size_t> quota(k, cfg.perf_voters / k);
        quota.back() += cfg.perf_voters - quota.back() * k;
        std::vector<ArgSet> truths;
        for (auto i : e.truth_indices) truths.push_back(g.prf[i]);
        e.election = build_absaf(g.af, truths, quota, e.phi, e.seed);

        const auto id = std::to_string(t);
        out.info["af"] = af_info(g);
        out.info["bucket"] = {lo, hi};
        out.info["electorates"] = nlohmann::json::array({electorate_info(id, e)});
        ScoreProfile p(e.election.absaf, g.prf, cfg.mode);
        for (auto st : {Strategy::exact, Strategy::greedy}) {
            auto s = solve_row(p, e, k, "utilitarian", st, cfg);
            s.row.instance_id = id;
            out.rows.push_back(std::move(s.row));
        }
        return out;
    });

    auto res = assemble("perf", cfg, std::move(outputs));
    for (std::size_t b = 0; b < cfg.perf_buckets.size(); ++b) {
        PerfBucket pb;
        std::tie(pb.lo, pb.hi) = cfg.perf_buckets[b];
        pb.instances = per_bucket;
        double exact_t = 0, greedy_t = 0;
        for (const auto& r : res.rows) {
            const auto t = std::stoull(r.instance_id);
            if (t / per_bucket != b || r.status != "ok") continue;
            if (r.strategy == "exact") ++pb.exact_ok, exact_t += r.runtime_ms / 1000.0;
            else ++pb.greedy_ok, greedy_t += r.runtime_ms / 1000.0;
        }
        if (pb.exact_ok) pb.exact_mean_s = exact_t / static_cast<double>(pb.exact_ok);
        if (pb.greedy_ok) pb.greedy_mean_s = greedy_t / static_cast<double>(pb.greedy_ok);
        res.perf.push_back(pb);
    }
    return res;
}

std::string approx_table_csv(const std::vector<ApproxCell>& cells) {
    std::ostringstream out;
    out << "phi,k,rule,pairs,mean_ratio,min_ratio\n";
    for (const auto& c : cells)
        out << num(c.phi) << ',' << c.k << ',' << quoted(c.rule) << ',' << c.pairs << ',' << num(c.mean_ratio) << ','
            << num(c.min_ratio) << '\n';
    return out.str();
}

std::string perf_table_csv(const std::vector<PerfBucket>& buckets) {
    std::ostringstream out;
    out << "bucket_lo,bucket_hi,instances,exact_successes,exact_mean_s,greedy_successes,greedy_mean_s\n";
    for (const auto& b : buckets)
        out << b.lo << ',' << b.hi << ',' << b.instances << ',' << b.exact_ok << ',' << opt(b.exact_mean_s) << ','
            << b.greedy_ok << ',' << opt(b.greedy_mean_s) << '\n';
    return out.str();
}

void write_outputs(const RunResult& result, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    write_file((dir / (result.name + ".csv")).string(), to_csv(result.rows));
    write_file((dir / (result.name + "_summary.csv")).string(), to_csv(result.summary));
    if (!result.approx.empty())
        write_file((dir / (result.name + "_ratios.csv")).string(), approx_table_csv(result.approx));
    if (!result.perf.empty()) write_file((dir / (result.name + "_table.csv")).string(), perf_table_csv(result.perf));

    const auto manifest_path = dir / "manifest.json";
    nlohmann::json manifest = nlohmann::json::object();
    if (fs::exists(manifest_path)) {
        try {
            manifest = nlohmann::json::parse(read_file(manifest_path.string()));
        } catch (const std::exception&) {
            manifest = nlohmann::json::object();
        }
    }
    manifest[result.name] = result.manifest;
    write_file(manifest_path.string(), manifest.dump(2) + "\n");
}

}  // namespace absaf
