#include "absaf/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace absaf {

AF gen_af(const GenParams& params) {
    const auto n = params.n_args;
    if (n < 2) throw std::invalid_argument("gen_af: need at least 2 arguments");
    if (params.attachment < 1 || params.attachment >= n)
        throw std::invalid_argument("gen_af: attachment must lie in 1..n_args-1");
    if (!(params.p_cycle >= 0.0 && params.p_cycle <= 1.0))
        throw std::invalid_argument("gen_af: p_cycle must lie in [0,1]");

    Rng rng(params.seed);
    std::vector<std::uint64_t> degree(n, 0);
    std::vector<std::pair<ArgId, ArgId>> attacks;
    std::vector<std::vector<ArgId>> attackers(n);

    for (ArgId v = 1; v < n; ++v) {
        const auto picks = std::min<std::size_t>(params.attachment, v);
        std::vector<bool> chosen(v, false);
        for (std::size_t p = 0; p < picks; ++p) {
            std::uint64_t total = 0;
            for (ArgId u = 0; u < v; ++u)
                if (!chosen[u]) total += degree[u] + 1;
            auto ticket = rng.uniform_index(total);
            ArgId target = 0;
            for (ArgId u = 0; u < v; ++u) {
                if (chosen[u]) continue;
                if (ticket < degree[u] + 1) {
                    target = u;
                    break;
                }
                ticket -= degree[u] + 1;
            }
            chosen[target] = true;
            attacks.emplace_back(v, target);
            attackers[target].push_back(v);
        }
        for (ArgId u = 0; u < v; ++u)
            if (chosen[u]) ++degree[u];
        degree[v] += picks;
    }

    for (ArgId v = 0; v < n; ++v) {
        // Draw for every node so the stream position does not depend on graph shape.
        const bool cycle = rng.bernoulli(params.p_cycle);
        const auto which = rng.next();
        if (!cycle || attackers[v].empty()) continue;
        const auto back = attackers[v][which % attackers[v].size()];
        attacks.emplace_back(v, back);
    }

    std::vector<std::string> labels;
    for (ArgId v = 0; v < n; ++v) labels.push_back("a" + std::to_string(v + 1));
    return AF(std::move(labels), std::move(attacks));
}

AF gen_until(const std::function<GenParams(std::size_t attempt)>& params_for,
             const std::function<bool(const AF&)>& accept, std::size_t max_tries) {
    for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
        auto af = gen_af(params_for(attempt));
        if (accept(af)) return af;
    }
    throw ResourceLimitError("no acceptable AF after " + std::to_string(max_tries) + " attempts");
}

std::vector<std::size_t> sample_ground_truths(std::size_t extension_count, std::size_t g, Rng& rng) {
    if (g > extension_count)
        throw std::invalid_argument("cannot sample " + std::to_string(g) + " ground truths from " +
                                    std::to_string(extension_count) + " extensions");
    std::vector<std::size_t> pool(extension_count);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t j = 0; j < g; ++j) {
        auto r = j + rng.uniform_index(extension_count - j);
        std::swap(pool[j], pool[r]);
    }
    pool.resize(g);
    std::sort(pool.begin(), pool.end());
    return pool;
}

ArgSet sample_ballot(const MallowsParams& params, Rng& rng) {
    const auto& truth = params.ground_truth;
    if (truth.empty()) throw std::invalid_argument("sample_ballot: empty ground truth");
    if (!(params.phi >= 0.0 && params.phi <= 1.0)) throw std::invalid_argument("sample_ballot: phi outside [0,1]");
    const double outside = params.phi / (1.0 + params.phi);
    ArgSet ballot(truth.universe());
    do {
        ballot.clear();
        for (ArgId a = 0; a < truth.universe(); ++a)
            if (rng.bernoulli(truth.test(a) ? 0.5 : outside)) ballot.set(a);
    } while (ballot.empty());
    return ballot;
}

std::size_t mallows_distance(const ArgSet& truth, const ArgSet& ballot) {
    return ballot.count() - ballot.intersection_count(truth);
}

GeneratedElection build_absaf(const AF& af, const std::vector<ArgSet>& truths,
                              const std::vector<std::size_t>& per_truth, double phi, std::uint64_t seed) {
    if (truths.size() != per_truth.size()) throw std::invalid_argument("build_absaf: one quota per truth");
    const auto total = std::accumulate(per_truth.begin(), per_truth.end(), std::size_t{0});
    if (total == 0) throw std::invalid_argument("build_absaf: electorate would be empty");
    Rng root(seed);
    std::vector<Ballot> ballots;
    std::vector<std::size_t> truth_of_voter;
    std::uint64_t voter = 0;
    for (std::size_t t = 0; t < truths.size(); ++t) {
        MallowsParams mp{phi, truths[t]};
        for (std::size_t j = 0; j < per_truth[t]; ++j) {
            auto stream = root.child(voter++);
            ballots.push_back({sample_ballot(mp, stream), 1});
            truth_of_voter.push_back(t);
        }
    }
    return {ABSAF(af, std::move(ballots)), truths, std::move(truth_of_voter)};
}

GeneratedElection build_absaf(const AF& af, const std::vector<ArgSet>& truths, std::size_t per_truth, double phi,
                              std::uint64_t seed) {
    if (per_truth == 0) throw std::invalid_argument("build_absaf: per_truth must be positive");
    return build_absaf(af, truths, std::vector<std::size_t>(truths.size(), per_truth), phi, seed);
}

}  // namespace absaf
