#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "absaf/limits.hpp"
#include "absaf/model.hpp"
#include "absaf/profile.hpp"

namespace absaf {

/// Non-increasing, non-negative OWA weights with a positive first entry.
class OwaWeights {
public:
    /// Throws std::invalid_argument if the invariants fail.
    explicit OwaWeights(std::vector<mpq_class> weights);

    static OwaWeights utilitarian(std::size_t n);
    static OwaWeights egalitarian(std::size_t n);
    static OwaWeights harmonic(std::size_t n);
    /// Comma-separated rationals, e.g. "1,1/2,0".
    static OwaWeights parse(const std::string& list);

    std::size_t size() const { return w_.size(); }
    const std::vector<mpq_class>& weights() const { return w_; }

private:
    std::vector<mpq_class> w_;
};

enum class RuleKind { utilitarian, egalitarian, harmonic, custom_owa, maxcov };
enum class Strategy { exact, greedy };

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& text);

struct RuleSpec {
    RuleKind kind = RuleKind::utilitarian;
    Strategy strategy = Strategy::exact;
    RepMode mode = RepMode::regular;
    /// Only for custom_owa; must have one weight per voter.
    std::vector<mpq_class> custom_weights;

    bool is_owa() const { return kind != RuleKind::maxcov; }
    /// Weight vector for an n-voter electorate. Throws for maxcov or a length mismatch.
    OwaWeights weights_for(std::size_t n) const;
    /// "utilitarian", "egalitarian", "harmonic", "maxcov" or "owa:<w1,...>".
    std::string name() const;
};

/// Parses the rule names accepted by name(); strategy and mode are left at their defaults.
RuleSpec parse_rule(const std::string& text);

/// Per-voter scores of the outcome formed by extension indices, sorted ascending.
std::vector<Ratio> sorted_rep_vector(const ScoreProfile& p, const std::vector<std::size_t>& outcome);
/// Number of voters scoring exactly 1.
std::size_t coverage_count(const ScoreProfile& p, const std::vector<std::size_t>& outcome);
/// Dot product. Throws std::invalid_argument on a length mismatch.
mpq_class owa_score(const std::vector<Ratio>& sorted_scores, const OwaWeights& w);

/// Rule objective of an outcome: OWA score, or coverage count for maxcov.
mpq_class rule_objective(const ScoreProfile& p, const RuleSpec& rule, const std::vector<std::size_t>& outcome);

struct Selection {
    /// Extension indices. Exact: ascending. Greedy: in pick order.
    std::vector<std::size_t> indices;
    mpq_class objective;
    /// k exceeded the number of extensions and was lowered to it.
    bool clamped = false;
};

struct TieBreak {
    /// Preference over extension indices; earlier wins ties. Empty means ascending index.
    std::vector<std::size_t> order;
};

/// Best outcome of size min(k, m) by exhaustive combination search. Among maximizers the
/// lexicographically first combination (positions in the tie-break order) wins.
/// Throws ResourceLimitError above the combination cap, TimeoutError past the deadline.
Selection solve_exact(const ScoreProfile& p, std::size_t k, const RuleSpec& rule, const SearchLimits& limits = {},
                      const TieBreak& tie = {});

/// Adds the extension that maximizes the objective of the partial outcome, min(k, m) times.
Selection solve_greedy(const ScoreProfile& p, std::size_t k, const RuleSpec& rule, const SearchLimits& limits = {},
                       const TieBreak& tie = {});

/// Dispatches on rule.strategy.
Selection solve(const ScoreProfile& p, std::size_t k, const RuleSpec& rule, const SearchLimits& limits = {},
                const TieBreak& tie = {});

/// Maps each viewpoint of omega to its index in the canonical extension list.
/// Throws std::invalid_argument for a viewpoint that is not listed.
std::vector<std::size_t> indices_of(const std::vector<ArgSet>& preferred, const Outcome& omega);

}  // namespace absaf
