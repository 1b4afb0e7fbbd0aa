#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "absaf/axioms.hpp"
#include "absaf/config.hpp"
#include "absaf/experiments.hpp"
#include "absaf/generators.hpp"
#include "absaf/io.hpp"
#include "absaf/representability.hpp"
#include "absaf/rules.hpp"

using namespace absaf;

namespace {

std::string braces(const AF& af, const ArgSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& l : af.labels_of(s)) {
        out += (first ? "" : ",") + l;
        first = false;
    }
    return out + "}";
}

std::string voters_text(const VoterSet& g) {
    std::string out;
    for (auto v : g.members()) out += (out.empty() ? "" : ",") + std::to_string(v + 1);
    return "{" + out + "}";
}

ABSAF load_absaf(const std::string& af_path, const std::string& ballots_path) {
    auto af = load_af(af_path);
    auto ballots = load_ballots(af, ballots_path);
    return ABSAF(std::move(af), std::move(ballots));
}

int cmd_prf(const std::string& path, const std::string& credulous) {
    auto af = load_af(path);
    auto prf = preferred_extensions(af);
    if (!credulous.empty()) {
        std::cout << (credulously_accepted(prf, af.id(credulous)) ? "YES" : "NO") << "\n";
        return 0;
    }
    std::cout << prf.size() << " preferred extension" << (prf.size() == 1 ? "" : "s") << "\n";
    for (const auto& e : prf) std::cout << braces(af, e) << "\n";
    return 0;
}

int cmd_represent(const std::string& af_path, const std::string& ballots_path, std::size_t k, RepMode mode) {
    auto s = load_absaf(af_path, ballots_path);
    auto ans = decide_representable(s, k, mode);
    std::cout << (ans.representable ? "YES" : "NO") << "\n";
    for (const auto& v : ans.witness.viewpoints) std::cout << braces(s.af(), v) << "\n";
    return 0;
}

int cmd_select(const std::string& af_path, const std::string& ballots_path, const std::string& rule_name,
               Strategy st, std::size_t k, RepMode mode, bool json) {
    auto s = load_absaf(af_path, ballots_path);
    auto prf = preferred_extensions(s.af());
    auto rule = parse_rule(rule_name);
    rule.strategy = st;
    rule.mode = mode;
    ScoreProfile p(s, prf, mode);
    if (rule.kind == RuleKind::custom_owa && rule.custom_weights.size() < p.voters())
        rule.custom_weights.resize(p.voters(), 0);
    auto sel = solve(p, k, rule);

    std::vector<Ratio> per_voter;
    for (std::size_t v = 0; v < p.voters(); ++v) {
        Ratio best = Ratio::zero();
        for (auto e : sel.indices) best = std::max(best, p.score(v, e));
        per_voter.push_back(best);
    }
    auto sorted = sorted_rep_vector(p, sel.indices);

    if (json) {
        nlohmann::json out;
        out["rule"] = rule_name;
        out["strategy"] = to_string(st);
        out["mode"] = to_string(mode);
        out["k"] = k;
        out["clamped"] = sel.clamped;
        for (auto e : sel.indices) out["outcome"].push_back(s.af().labels_of(prf[e]));
        out["objective"] = sel.objective.get_str();
        out["objective_value"] = sel.objective.get_d();
        for (const auto& r : per_voter) out["scores"].push_back(r.str());
        for (const auto& r : sorted) out["sorted"].push_back(r.str());
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << rule_name << " (" << to_string(st) << ", " << to_string(mode) << "), k = " << k
              << (sel.clamped ? " (clamped to " + std::to_string(sel.indices.size()) + ")" : "") << "\n";
    for (auto e : sel.indices) std::cout << "  " << braces(s.af(), prf[e]) << "\n";
    std::cout << "objective: " << sel.objective.get_str() << " = " << sel.objective.get_d() << "\n";
    std::cout << "sorted:";
    for (const auto& r : sorted) std::cout << " " << r.str();
    std::cout << "\nvoters:\n";
    for (std::size_t v = 0; v < per_voter.size(); ++v) std::cout << "  " << v + 1 << ": " << per_voter[v].str() << "\n";
    return 0;
}

int cmd_audit(const std::string& af_path, const std::string& ballots_path, const std::string& outcome_path,
              std::size_t k, RepMode mode, const std::string& axiom) {
    auto s = load_absaf(af_path, ballots_path);
    auto prf = preferred_extensions(s.af());
    auto omega = parse_outcome(s.af(), read_file(outcome_path), prf);
    if (omega.empty()) throw ValidationError("outcome file lists no viewpoint");
    if (omega.size() > k)
        throw ValidationError("outcome has " + std::to_string(omega.size()) + " viewpoints, more than k = " +
                              std::to_string(k));
    ScoreProfile p(s, prf, mode);
    auto idx = indices_of(prf, omega);
    bool holds;
    VoterSet group;
    std::size_t ext = 0;
    if (axiom == "jr") {
        auto v = check_jr(p, idx, k);
        holds = v.holds, group = v.group, ext = v.extension;
    } else {
        auto v = check_sjr(p, idx, k);
        holds = v.holds, group = v.group, ext = v.extension;
    }
    std::cout << (holds ? "holds" : "violated") << "\n";
    if (!holds)
        std::cout << "group " << voters_text(group) << " is fully represented by " << braces(s.af(), prf[ext])
                  << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approval-based social argumentation: extensions, representation, rules, axioms, experiments"};
    app.require_subcommand(1);

    std::map<std::string, RepMode> modes{{"regular", RepMode::regular}, {"core", RepMode::core}};
    std::map<std::string, Strategy> strategies{{"exact", Strategy::exact}, {"greedy", Strategy::greedy}};

    std::string af_path, ballots_path, outcome_path, credulous, rule = "utilitarian", axiom = "jr";
    std::size_t k = 1;
    RepMode mode = RepMode::regular;
    Strategy strategy = Strategy::exact;
    bool json = false;

    auto* prf = app.add_subcommand("prf", "list the preferred extensions of an AF (.apx or .tgf)");
    prf->add_option("af", af_path)->required()->check(CLI::ExistingFile);
    prf->add_option("--credulous", credulous, "only report whether this argument is in some extension");

    auto add_absaf = [&](CLI::App* c) {
        c->add_option("af", af_path, "AF file")->required()->check(CLI::ExistingFile);
        c->add_option("ballots", ballots_path, "ballots (.json or `count : a,b` lines)")
            ->required()
            ->check(CLI::ExistingFile);
        c->add_option("--mode", mode)->transform(CLI::CheckedTransformer(modes));
    };

    auto* rep = app.add_subcommand("represent", "is there an outcome of size <= k representing everyone?");
    add_absaf(rep);
    rep->add_option("--k", k)->required()->check(CLI::PositiveNumber);

    auto* sel = app.add_subcommand("select", "select viewpoints with a voting rule");
    add_absaf(sel);
    sel->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    sel->add_option("--rule", rule, "utilitarian|egalitarian|harmonic|maxcov|owa:<w1,w2,...>");
    sel->add_option("--strategy", strategy)->transform(CLI::CheckedTransformer(strategies));
    sel->add_flag("--json", json, "machine-readable output");

    auto* aud = app.add_subcommand("audit", "check JR or SJR for a given outcome");
    add_absaf(aud);
    aud->add_option("outcome", outcome_path, "one viewpoint per line, comma-separated labels")
        ->required()
        ->check(CLI::ExistingFile);
    aud->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    aud->add_option("--axiom", axiom)->check(CLI::IsMember({"jr", "sjr"}));

    GenParams gp;
    std::size_t truths = 3, per_truth = 10;
    double phi = 0.5;
    std::string out_dir;
    auto* gen = app.add_subcommand("gen", "generate an AF and Mallows ballots around sampled ground truths");
    gen->add_option("--n-args", gp.n_args)->check(CLI::Range(2, 100000));
    gen->add_option("--p-cycle", gp.p_cycle)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--attachment", gp.attachment)->check(CLI::PositiveNumber);
    gen->add_option("--truths", truths)->check(CLI::PositiveNumber);
    gen->add_option("--per-truth", per_truth)->check(CLI::PositiveNumber);
    gen->add_option("--phi", phi)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", gp.seed);
    gen->add_option("--out", out_dir)->required();

    auto* exp = app.add_subcommand("exp", "run an experiment family and write CSV");
    exp->require_subcommand(1);
    std::string config_path;
    std::vector<std::string> settings;
    bool paper_scale = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> threads;
    std::optional<double> timeout;
    std::optional<std::string> exp_out;
    std::map<std::string, std::string> runs = {
        {"vary-k", "vary_k"}, {"metrics", "metrics"}, {"greedy-approx", "greedy_approx"}, {"perf", "perf"}};
    for (const auto& [sub, _] : runs) {
        auto* c = exp->add_subcommand(sub);
        c->add_option("--config", config_path, "key = value file")->check(CLI::ExistingFile);
        c->add_option("--set", settings, "override one key, e.g. --set k=1-3 (repeatable)");
        c->add_flag("--paper-scale", paper_scale, "start from the full-scale settings");
        c->add_option("--seed", seed);
        c->add_option("--threads", threads);
        c->add_option("--timeout", timeout, "seconds per solve");
        c->add_option("--out", exp_out, "output directory");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*prf) return cmd_prf(af_path, credulous);
        if (*rep) return cmd_represent(af_path, ballots_path, k, mode);
        if (*sel) return cmd_select(af_path, ballots_path, rule, strategy, k, mode, json);
        if (*aud) return cmd_audit(af_path, ballots_path, outcome_path, k, mode, axiom);
        if (*gen) {
            auto af = gen_af(gp);
            auto prf_list = preferred_extensions(af);
            Rng rng(gp.seed);
            Rng truth_rng = rng.child(0);
            auto chosen = sample_ground_truths(prf_list.size(), truths, truth_rng);
            std::vector<ArgSet> truth_sets;
            for (auto i : chosen) {
                if (prf_list[i].empty()) throw ValidationError("the only preferred extension is empty");
                truth_sets.push_back(prf_list[i]);
            }
            auto el = build_absaf(af, truth_sets, per_truth, phi, rng.child(1).next());
            std::filesystem::create_directories(out_dir);
            const std::filesystem::path dir(out_dir);
            write_file((dir / "af.apx").string(), write_apx(af));
            write_file((dir / "ballots.json").string(), write_ballots_json(el.absaf));
            nlohmann::json meta;
            meta["n_args"] = gp.n_args;
            meta["p_cycle"] = gp.p_cycle;
            meta["attachment"] = gp.attachment;
            meta["seed"] = gp.seed;
            meta["phi"] = phi;
            meta["per_truth"] = per_truth;
            meta["extensions"] = prf_list.size();
            meta["truth_indices"] = chosen;
            for (const auto& t : truth_sets) meta["truths"].push_back(af.labels_of(t));
            meta["truth_of_voter"] = el.truth_of_voter;
            write_file((dir / "meta.json").string(), meta.dump(2) + "\n");
            std::cout << "wrote " << (dir / "af.apx").string() << ", ballots.json, meta.json (" << prf_list.size()
                      << " preferred extensions, " << el.absaf.voter_count() << " voters)\n";
            return 0;
        }
        for (const auto& [sub, name] : runs) {
            if (!exp->got_subcommand(sub)) continue;
            ExperimentConfig cfg = paper_scale ? paper_scale_config() : ExperimentConfig{};
            if (!config_path.empty()) cfg = load_config(config_path, cfg);
            for (const auto& kv : settings) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
                apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
            }
            if (seed) cfg.seed = *seed;
            if (threads) cfg.threads = *threads;
            if (timeout) cfg.timeout = *timeout;
            if (exp_out) cfg.out_dir = *exp_out;
            cfg.validate();

            RunResult res = name == "vary_k"    ? run_varying_k(cfg)
                             : name == "metrics" ? run_metrics(cfg)
                             : name == "perf"    ? run_performance(cfg)
                                                 : run_greedy_approx(cfg);
            write_outputs(res, cfg.out_dir);
            std::cout << "wrote " << res.rows.size() << " rows to " << cfg.out_dir << "/" << res.name << ".csv\n";
            if (!res.perf.empty()) std::cout << perf_table_csv(res.perf);
            if (!res.approx.empty()) {
                std::map<std::string, double> worst;
                for (const auto& c : res.approx)
                    worst[c.rule] = worst.count(c.rule) ? std::min(worst[c.rule], c.mean_ratio) : c.mean_ratio;
                for (const auto& [r, v] : worst) std::cout << r << ": lowest mean greedy/exact ratio " << v << "\n";
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
