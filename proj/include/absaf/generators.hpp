#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "absaf/af.hpp"
#include "absaf/model.hpp"
#include "absaf/rng.hpp"

namespace absaf {

struct GenParams {
    std::size_t n_args = 10;
    /// Probability that a node receives a counter-attack toward one of its attackers.
    double p_cycle = 0.5;
    /// Attacks issued by each newly added argument.
    std::size_t attachment = 1;
    std::uint64_t seed = 0;
};

/// Scale-free attack graph. Arguments a1..an arrive in order; each new argument attacks
/// `attachment` distinct earlier arguments chosen with probability proportional to
/// degree + 1 (preferential attachment), giving an acyclic base. Then each argument with
/// at least one attacker, independently with probability p_cycle, attacks one of its
/// attackers chosen uniformly, closing a 2-cycle. Deterministic in the seed.
/// Throws std::invalid_argument unless n_args >= 2, 1 <= attachment < n_args and
/// p_cycle is in [0, 1].
AF gen_af(const GenParams& params);

/// Draws parameters from `params_for(attempt)` until the AF satisfies `accept`.
/// Throws ResourceLimitError after max_tries rejected attempts.
AF gen_until(const std::function<GenParams(std::size_t attempt)>& params_for,
             const std::function<bool(const AF&)>& accept, std::size_t max_tries);

/// g distinct indices into the extension list, uniform without replacement, ascending.
/// Throws std::invalid_argument if g exceeds the number of extensions.
std::vector<std::size_t> sample_ground_truths(std::size_t extension_count, std::size_t g, Rng& rng);

struct MallowsParams {
    double phi = 0.5;
    ArgSet ground_truth;
};

/// Nonempty ballot S' drawn with probability proportional to phi^{|S' \ S|}.
/// Members of S are kept with probability 1/2, others added with probability
/// phi / (1 + phi); an empty draw is rejected and redrawn.
ArgSet sample_ballot(const MallowsParams& params, Rng& rng);

/// d(S, S'): number of arguments of S' outside S.
std::size_t mallows_distance(const ArgSet& truth, const ArgSet& ballot);

struct GeneratedElection {
    ABSAF absaf;
    /// Ground-truth extensions, in the order they were given.
    std::vector<ArgSet> truths;
    /// truth_of_voter[i - 1] is the index into `truths` voter i was centered on.
    std::vector<std::size_t> truth_of_voter;
};

/// per_truth[t] voters centered on truths[t]; voter j (0-based, overall) samples from the
/// child stream j of Rng(seed). Throws std::invalid_argument when no voter would be drawn.
GeneratedElection build_absaf(const AF& af, const std::vector<ArgSet>& truths,
                              const std::vector<std::size_t>& per_truth, double phi, std::uint64_t seed);
GeneratedElection build_absaf(const AF& af, const std::vector<ArgSet>& truths, std::size_t per_truth, double phi,
                              std::uint64_t seed);

}  // namespace absaf
