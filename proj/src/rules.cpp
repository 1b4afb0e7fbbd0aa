#include "absaf/rules.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "absaf/errors.hpp"

namespace absaf {

OwaWeights::OwaWeights(std::vector<mpq_class> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw std::invalid_argument("OWA weights must not be empty");
    if (w_.front() <= 0) throw std::invalid_argument("first OWA weight must be positive");
    for (std::size_t j = 0; j < w_.size(); ++j) {
        w_[j].canonicalize();
        if (w_[j] < 0) throw std::invalid_argument("OWA weights must be non-negative");
        if (j > 0 && w_[j] > w_[j - 1]) throw std::invalid_argument("OWA weights must be non-increasing");
    }
}

OwaWeights OwaWeights::utilitarian(std::size_t n) { return OwaWeights(std::vector<mpq_class>(n, 1)); }

OwaWeights OwaWeights::egalitarian(std::size_t n) {
    std::vector<mpq_class> w(n, 0);
    if (n > 0) w[0] = 1;
    return OwaWeights(std::move(w));
}

OwaWeights OwaWeights::harmonic(std::size_t n) {
    std::vector<mpq_class> w;
    for (std::size_t j = 1; j <= n; ++j) w.emplace_back(mpz_class(1), mpz_class(static_cast<unsigned long>(j)));
    return OwaWeights(std::move(w));
}

OwaWeights OwaWeights::parse(const std::string& list) {
    std::vector<mpq_class> w;
    std::stringstream items(list);
    std::string item;
    while (std::getline(items, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        mpq_class q;
        if (item.find('.') != std::string::npos) {
            // Decimal literal: exact conversion via the digit string.
            auto dot = item.find('.');
            auto digits = item.substr(0, dot) + item.substr(dot + 1);
            mpz_class num, den;
            if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad weight '" + item + "'");
            mpz_ui_pow_ui(den.get_mpz_t(), 10, item.size() - dot - 1);
            q = mpq_class(num, den);
        } else if (q.set_str(item, 10) != 0) {
            throw std::invalid_argument("bad weight '" + item + "'");
        }
        q.canonicalize();
        w.push_back(q);
    }
    return OwaWeights(std::move(w));
}

std::string to_string(Strategy s) { return s == Strategy::exact ? "exact" : "greedy"; }

Strategy parse_strategy(const std::string& text) {
    if (text == "exact") return Strategy::exact;
    if (text == "greedy") return Strategy::greedy;
    throw std::invalid_argument("unknown strategy '" + text + "'");
}

OwaWeights RuleSpec::weights_for(std::size_t n) const {
    switch (kind) {
        case RuleKind::utilitarian: return OwaWeights::utilitarian(n);
        case RuleKind::egalitarian: return OwaWeights::egalitarian(n);
        case RuleKind::harmonic: return OwaWeights::harmonic(n);
        case RuleKind::custom_owa:
            if (custom_weights.size() != n)
                throw std::invalid_argument("custom OWA vector has " + std::to_string(custom_weights.size()) +
                                            " weights for " + std::to_string(n) + " voters");
            return OwaWeights(custom_weights);
        case RuleKind::maxcov: break;
    }
    throw std::invalid_argument("maxcov has no weight vector");
}

std::string RuleSpec::name() const {
    switch (kind) {
        case RuleKind::utilitarian: return "utilitarian";
        case RuleKind::egalitarian: return "egalitarian";
        case RuleKind::harmonic: return "harmonic";
        case RuleKind::maxcov: return "maxcov";
        case RuleKind::custom_owa: {
            std::string out = "owa:";
            for (std::size_t j = 0; j < custom_weights.size(); ++j) out += (j ? "," : "") + custom_weights[j].get_str();
            return out;
        }
    }
    return "?";
}

RuleSpec parse_rule(const std::string& text) {
    RuleSpec r;
    if (text == "utilitarian") r.kind = RuleKind::utilitarian;
    else if (text == "egalitarian") r.kind = RuleKind::egalitarian;
    else if (text == "harmonic") r.kind = RuleKind::harmonic;
    else if (text == "maxcov") r.kind = RuleKind::maxcov;
    else if (text.rfind("owa:", 0) == 0) {
        r.kind = RuleKind::custom_owa;
        r.custom_weights = OwaWeights::parse(text.substr(4)).weights();
    } else
        throw std::invalid_argument("unknown rule '" + text + "'");
    return r;
}

mpq_class owa_score(const std::vector<Ratio>& sorted_scores, const OwaWeights& w) {
    if (sorted_scores.size() != w.size())
        throw std::invalid_argument("score vector and weight vector differ in length");
    mpq_class sum = 0;
    for (std::size_t j = 0; j < w.size(); ++j) sum += sorted_scores[j].to_mpq() * w.weights()[j];
    return sum;
}

namespace {

// Objective of a per-voter best-rank vector. OWA scores are computed from rank counts
// (a counting sort) against prefix sums of the weights.
class Evaluator {
public:
    Evaluator(const ScoreProfile& p, const RuleSpec& rule)
        : p_(p), maxcov_(rule.kind == RuleKind::maxcov), counts_(p.values().size(), 0) {
        if (maxcov_) return;
        const auto w = rule.weights_for(p.voters());
        prefix_.assign(p.voters() + 1, 0);
        prefix_d_.assign(p.voters() + 1, 0.0);
        for (std::size_t j = 0; j < p.voters(); ++j) {
            prefix_[j + 1] = prefix_[j] + w.weights()[j];
            prefix_d_[j + 1] = prefix_[j + 1].get_d();
        }
        for (const auto& v : p.values()) {
            value_.push_back(v.to_mpq());
            value_d_.push_back(v.to_double());
        }
    }

    double approx(const std::uint32_t* best) {
        if (maxcov_) return static_cast<double>(covered(best));
        tally(best);
        double sum = 0;
        std::size_t pos = 0;
        for (std::size_t r = 0; r < counts_.size(); ++r) {
            if (!counts_[r]) continue;
            sum += value_d_[r] * (prefix_d_[pos + counts_[r]] - prefix_d_[pos]);
            pos += counts_[r];
        }
        return sum;
    }

    mpq_class exact(const std::uint32_t* best) {
        if (maxcov_) return mpq_class(static_cast<unsigned long>(covered(best)));
        tally(best);
        mpq_class sum = 0;
        std::size_t pos = 0;
        for (std::size_t r = 0; r < counts_.size(); ++r) {
            if (!counts_[r]) continue;
            sum += value_[r] * (prefix_[pos + counts_[r]] - prefix_[pos]);
            pos += counts_[r];
        }
        return sum;
    }

private:
    std::size_t covered(const std::uint32_t* best) const {
        std::size_t c = 0;
        for (std::size_t v = 0; v < p_.voters(); ++v) c += best[v] == p_.one_rank();
        return c;
    }

    void tally(const std::uint32_t* best) {
        std::fill(counts_.begin(), counts_.end(), 0);
        for (std::size_t v = 0; v < p_.voters(); ++v) ++counts_[best[v]];
    }

    const ScoreProfile& p_;
    bool maxcov_;
    std::vector<std::uint32_t> counts_;
    std::vector<mpq_class> prefix_, value_;
    std::vector<double> prefix_d_, value_d_;
};

// Keeps the first strictly best candidate. Doubles filter out clear losers and clear
// winners; near ties are settled exactly.
class Incumbent {
public:
    Incumbent(Evaluator& eval, std::size_t voters) : eval_(eval), ranks_(voters) {}

    /// True if `cand` strictly beats the incumbent (or there is none yet).
    bool offer(const std::uint32_t* cand) {
        const double a = eval_.approx(cand);
        if (has_) {
            const double tol = 1e-9 * (1.0 + std::fabs(approx_));
            if (a < approx_ - tol) return false;
            if (a <= approx_ + tol) {
                if (stale_) {
                    exact_ = eval_.exact(ranks_.data());
                    stale_ = false;
                }
                mpq_class x = eval_.exact(cand);
                if (x <= exact_) return false;
                exact_ = x;
                approx_ = a;
                std::copy(cand, cand + ranks_.size(), ranks_.begin());
                return true;
            }
        }
        has_ = true;
        stale_ = true;
        approx_ = a;
        std::copy(cand, cand + ranks_.size(), ranks_.begin());
        return true;
    }

    bool has() const { return has_; }
    mpq_class objective() {
        if (stale_) {
            exact_ = eval_.exact(ranks_.data());
            stale_ = false;
        }
        return exact_;
    }
    const std::vector<std::uint32_t>& ranks() const { return ranks_; }

private:
    Evaluator& eval_;
    std::vector<std::uint32_t> ranks_;
    bool has_ = false;
    bool stale_ = false;
    double approx_ = 0;
    mpq_class exact_;
};

std::vector<std::size_t> tie_order(const ScoreProfile& p, const TieBreak& tie) {
    std::vector<std::size_t> order = tie.order;
    if (order.empty()) {
        order.resize(p.extensions());
        std::iota(order.begin(), order.end(), 0);
    }
    auto check = order;
    std::sort(check.begin(), check.end());
    for (std::size_t j = 0; j < check.size(); ++j)
        if (check[j] != j || check.size() != p.extensions())
            throw std::invalid_argument("tie-break order must be a permutation of extension indices");
    return order;
}

std::vector<std::uint32_t> best_ranks(const ScoreProfile& p, const std::vector<std::size_t>& outcome) {
    if (outcome.empty()) throw std::invalid_argument("empty outcome");
    std::vector<std::uint32_t> best(p.voters(), 0);
    for (auto e : outcome) {
        if (e >= p.extensions()) throw std::invalid_argument("extension index out of range");
        const auto* r = p.ext_ranks(e);
        for (std::size_t v = 0; v < p.voters(); ++v) best[v] = std::max(best[v], r[v]);
    }
    return best;
}

class ExactSearch {
public:
    ExactSearch(const ScoreProfile& p, const RuleSpec& rule, std::size_t size, const SearchLimits& limits,
                std::vector<std::size_t> order)
        : p_(p), size_(size), limits_(limits), order_(std::move(order)), eval_(p, rule),
          best_(eval_, p.voters()), levels_(size + 1, std::vector<std::uint32_t>(p.voters(), 0)) {}

    Selection run() {
        chosen_.clear();
        dfs(0, 0);
        Selection s;
        s.indices = winner_;
        std::sort(s.indices.begin(), s.indices.end());
        s.objective = best_.objective();
        return s;
    }

private:
    void dfs(std::size_t depth, std::size_t start) {
        const auto m = order_.size();
        const auto n = p_.voters();
        for (std::size_t pos = start; pos + (size_ - depth) <= m; ++pos) {
            const auto ext = order_[pos];
            const auto* r = p_.ext_ranks(ext);
            const auto& prev = levels_[depth];
            auto& next = levels_[depth + 1];
            for (std::size_t v = 0; v < n; ++v) next[v] = std::max(prev[v], r[v]);
            chosen_.push_back(ext);
            if (depth + 1 == size_) {
                if (limits_.deadline && (++leaves_ & 0x3ff) == 0 && Clock::now() > *limits_.deadline)
                    throw TimeoutError("exact solve timed out");
                if (best_.offer(next.data())) winner_ = chosen_;
            } else {
                dfs(depth + 1, pos + 1);
            }
            chosen_.pop_back();
        }
    }

    const ScoreProfile& p_;
    std::size_t size_;
    const SearchLimits& limits_;
    std::vector<std::size_t> order_;
    Evaluator eval_;
    Incumbent best_;
    std::vector<std::vector<std::uint32_t>> levels_;
    std::vector<std::size_t> chosen_, winner_;
    std::uint64_t leaves_ = 0;
};

}  // namespace

std::vector<Ratio> sorted_rep_vector(const ScoreProfile& p, const std::vector<std::size_t>& outcome) {
    auto best = best_ranks(p, outcome);
    std::sort(best.begin(), best.end());
    std::vector<Ratio> out;
    out.reserve(best.size());
    for (auto r : best) out.push_back(p.values()[r]);
    return out;
}

std::size_t coverage_count(const ScoreProfile& p, const std::vector<std::size_t>& outcome) {
    if (outcome.empty()) return 0;
    auto best = best_ranks(p, outcome);
    return static_cast<std::size_t>(std::count(best.begin(), best.end(), p.one_rank()));
}

mpq_class rule_objective(const ScoreProfile& p, const RuleSpec& rule, const std::vector<std::size_t>& outcome) {
    Evaluator eval(p, rule);
    auto best = best_ranks(p, outcome);
    return eval.exact(best.data());
}

Selection solve_exact(const ScoreProfile& p, std::size_t k, const RuleSpec& rule, const SearchLimits& limits,
                      const TieBreak& tie) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (p.voters() == 0) throw std::invalid_argument("no voters");
    const auto size = std::min(k, p.extensions());
    check_combination_cap(p.extensions(), size, limits);
    auto sel = ExactSearch(p, rule, size, limits, tie_order(p, tie)).run();
    sel.clamped = k > p.extensions();
    return sel;
}

Selection solve_greedy(const ScoreProfile& p, std::size_t k, const RuleSpec& rule, const SearchLimits& limits,
                       const TieBreak& tie) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (p.voters() == 0) throw std::invalid_argument("no voters");
    const auto order = tie_order(p, tie);
    const auto size = std::min(k, p.extensions());
    const auto n = p.voters();
    Evaluator eval(p, rule);
    std::vector<std::uint32_t> current(n, 0), cand(n);
    std::vector<bool> taken(p.extensions(), false);
    Selection sel;
    sel.clamped = k > p.extensions();
    for (std::size_t round = 0; round < size; ++round) {
        if (limits.deadline && Clock::now() > *limits.deadline) throw TimeoutError("greedy solve timed out");
        Incumbent best(eval, n);
        std::size_t pick = p.extensions();
        for (auto ext : order) {
            if (taken[ext]) continue;
            const auto* r = p.ext_ranks(ext);
            for (std::size_t v = 0; v < n; ++v) cand[v] = std::max(current[v], r[v]);
            if (best.offer(cand.data())) pick = ext;
        }
        taken[pick] = true;
        sel.indices.push_back(pick);
        current = best.ranks();
        if (round + 1 == size) sel.objective = best.objective();
    }
    return sel;
}

Selection solve(const ScoreProfile& p, std::size_t k, const RuleSpec& rule, const SearchLimits& limits,
                const TieBreak& tie) {
    return rule.strategy == Strategy::exact ? solve_exact(p, k, rule, limits, tie)
                                            : solve_greedy(p, k, rule, limits, tie);
}

std::vector<std::size_t> indices_of(const std::vector<ArgSet>& preferred, const Outcome& omega) {
    std::vector<std::size_t> out;
    for (const auto& pi : omega.viewpoints) {
        auto it = std::find(preferred.begin(), preferred.end(), pi);
        if (it == preferred.end()) throw std::invalid_argument("viewpoint is not a preferred extension");
        out.push_back(static_cast<std::size_t>(it - preferred.begin()));
    }
    return out;
}

}  // namespace absaf
