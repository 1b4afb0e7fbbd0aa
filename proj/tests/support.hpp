#pragma once

// Test-only oracles and random instance builders. Nothing here calls into the search code
// it is used to check: semantics are re-derived from the raw attack list and ballots.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "absaf/af.hpp"
#include "absaf/model.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Graph {
    std::size_t n = 0;
    std::vector<Mask> attackers;  // attackers[a]: bitmask of arguments attacking a
    std::vector<Mask> targets;    // targets[a]: bitmask of arguments a attacks
};

inline Graph graph_of(const absaf::AF& af) {
    Graph g;
    g.n = af.size();
    g.attackers.assign(g.n, 0);
    g.targets.assign(g.n, 0);
    for (auto [a, b] : af.attacks()) {
        g.attackers[b] |= Mask{1} << a;
        g.targets[a] |= Mask{1} << b;
    }
    return g;
}

inline bool admissible(const Graph& g, Mask s) {
    Mask plus = 0;
    for (std::size_t a = 0; a < g.n; ++a)
        if (s >> a & 1) plus |= g.targets[a];
    if (plus & s) return false;
    for (std::size_t a = 0; a < g.n; ++a)
        if ((s >> a & 1) && (g.attackers[a] & ~plus)) return false;
    return true;
}

/// All 2^n subsets, filtered to admissible, reduced to the maximal ones.
inline std::set<Mask> preferred(const absaf::AF& af) {
    auto g = graph_of(af);
    std::vector<Mask> adm;
    for (Mask s = 0; s < (Mask{1} << g.n); ++s)
        if (admissible(g, s)) adm.push_back(s);
    std::set<Mask> out;
    for (auto s : adm) {
        bool maximal = true;
        for (auto t : adm)
            if (t != s && (s & t) == s) {
                maximal = false;
                break;
            }
        if (maximal) out.insert(s);
    }
    return out;
}

inline std::vector<Mask> admissible_sets(const absaf::AF& af) {
    auto g = graph_of(af);
    std::vector<Mask> adm;
    for (Mask s = 0; s < (Mask{1} << g.n); ++s)
        if (admissible(g, s)) adm.push_back(s);
    return adm;
}

inline Mask mask_of(const absaf::ArgSet& s) {
    Mask m = 0;
    for (auto a : s.members()) m |= Mask{1} << a;
    return m;
}

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Representation of voter i (0-based) by extension pi, recomputed from masks.
inline mpq_class rep(Mask ballot, Mask pi, const std::vector<Mask>& prf, absaf::RepMode mode) {
    int den = popcount(ballot);
    if (mode == absaf::RepMode::core) {
        den = 0;
        for (auto e : prf) den = std::max(den, popcount(ballot & e));
        if (den == 0) return 1;
    }
    mpq_class r(popcount(ballot & pi), den);
    r.canonicalize();
    return r;
}

inline std::vector<Mask> voter_masks(const absaf::ABSAF& s) {
    std::vector<Mask> out;
    for (absaf::VoterId i = 1; i <= s.voter_count(); ++i) out.push_back(mask_of(s.approval(i)));
    return out;
}

/// All subsets of {0..m-1} with 1..k elements, as index vectors.
inline std::vector<std::vector<std::size_t>> subsets_up_to(std::size_t m, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t bits = 1; bits < (1u << m); ++bits) {
        if (static_cast<std::size_t>(__builtin_popcount(bits)) > k) continue;
        std::vector<std::size_t> s;
        for (std::size_t e = 0; e < m; ++e)
            if (bits >> e & 1) s.push_back(e);
        out.push_back(s);
    }
    return out;
}

/// Per-voter outcome scores via direct max over viewpoints.
inline std::vector<mpq_class> outcome_scores(const std::vector<Mask>& voters, const std::vector<Mask>& prf,
                                             const std::vector<std::size_t>& outcome, absaf::RepMode mode) {
    std::vector<mpq_class> out;
    for (auto b : voters) {
        mpq_class best = 0;
        for (auto e : outcome) best = std::max(best, rep(b, prf[e], prf, mode));
        out.push_back(best);
    }
    return out;
}

/// Brute-force: does some outcome of at most k extensions 1-represent every voter?
inline bool representable(const std::vector<Mask>& voters, const std::vector<Mask>& prf, std::size_t k,
                          absaf::RepMode mode) {
    for (const auto& o : subsets_up_to(prf.size(), k)) {
        auto sc = outcome_scores(voters, prf, o, mode);
        if (std::all_of(sc.begin(), sc.end(), [](const mpq_class& x) { return x == 1; })) return true;
    }
    return false;
}

/// Fully naive SJR: every voter subset N' with |N'| >= n/k that some extension fully
/// represents must be fully represented by a single viewpoint of the outcome.
inline bool sjr(const std::vector<Mask>& voters, const std::vector<Mask>& prf, const std::vector<std::size_t>& outcome,
                absaf::RepMode mode) {
    const auto n = voters.size();
    const auto k = outcome.size();
    auto covers = [&](Mask pi, std::uint32_t group) {
        for (std::size_t i = 0; i < n; ++i)
            if ((group >> i & 1) && rep(voters[i], pi, prf, mode) != 1) return false;
        return true;
    };
    for (std::uint32_t group = 1; group < (1u << n); ++group) {
        if (static_cast<std::size_t>(__builtin_popcount(group)) * k < n) continue;
        bool representable = std::any_of(prf.begin(), prf.end(), [&](Mask pi) { return covers(pi, group); });
        if (!representable) continue;
        bool ok = std::any_of(outcome.begin(), outcome.end(), [&](std::size_t e) { return covers(prf[e], group); });
        if (!ok) return false;
    }
    return true;
}

/// Fully naive JR over all voter subsets.
inline bool jr(const std::vector<Mask>& voters, const std::vector<Mask>& prf, const std::vector<std::size_t>& outcome,
               absaf::RepMode mode) {
    const auto n = voters.size();
    const auto k = outcome.size();
    for (std::uint32_t group = 1; group < (1u << n); ++group) {
        if (static_cast<std::size_t>(__builtin_popcount(group)) * k < n) continue;
        bool representable = std::any_of(prf.begin(), prf.end(), [&](Mask pi) {
            for (std::size_t i = 0; i < n; ++i)
                if ((group >> i & 1) && rep(voters[i], pi, prf, mode) != 1) return false;
            return true;
        });
        if (!representable) continue;
        bool someone = false;
        for (std::size_t i = 0; i < n && !someone; ++i)
            if (group >> i & 1)
                for (auto e : outcome)
                    if (rep(voters[i], prf[e], prf, mode) == 1) someone = true;
        if (!someone) return false;
    }
    return true;
}

}  // namespace oracle

namespace gen {

/// Random AF on n arguments; each ordered pair (including self-loops) attacks with prob. p.
inline absaf::AF random_af(std::mt19937_64& rng, std::size_t n, double p, double p_self = 0.05) {
    std::bernoulli_distribution edge(p), self(p_self);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) labels.push_back("x" + std::to_string(a));
    std::vector<std::pair<std::size_t, std::size_t>> att;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a == b ? self(rng) : edge(rng)) att.emplace_back(a, b);
    return absaf::AF(labels, att);
}

/// Random nonempty ballots; `from` restricts approvals to a pool of arguments when nonempty.
inline absaf::ABSAF random_absaf(std::mt19937_64& rng, absaf::AF af, std::size_t voters, double p_approve,
                                 const std::vector<absaf::ArgSet>& centers = {}) {
    std::bernoulli_distribution in(p_approve), keep(0.7), stray(0.1);
    std::vector<absaf::Ballot> ballots;
    for (std::size_t v = 0; v < voters; ++v) {
        absaf::ArgSet b(af.size());
        do {
            b.clear();
            if (!centers.empty()) {
                const auto& c = centers[std::uniform_int_distribution<std::size_t>(0, centers.size() - 1)(rng)];
                for (std::size_t a = 0; a < af.size(); ++a)
                    if (c.test(a) ? keep(rng) : stray(rng)) b.set(a);
            } else {
                for (std::size_t a = 0; a < af.size(); ++a)
                    if (in(rng)) b.set(a);
            }
        } while (b.empty());
        ballots.push_back({b, 1});
    }
    return absaf::ABSAF(std::move(af), std::move(ballots));
}

}  // namespace gen

namespace gen {

/// An ABSAF over a random AF with between min_prf and max_prf preferred extensions.
/// Ballots cluster around a few extensions so that both YES and NO answers occur.
struct Instance {
    absaf::ABSAF absaf;
    std::vector<absaf::ArgSet> prf;
};

inline Instance random_instance(std::mt19937_64& rng, std::size_t max_voters = 10, std::size_t min_prf = 2,
                                std::size_t max_prf = 8) {
    std::uniform_int_distribution<std::size_t> n_args(3, 10), n_voters(1, max_voters);
    std::uniform_real_distribution<double> density(0.08, 0.35);
    for (;;) {
        auto af = random_af(rng, n_args(rng), density(rng), 0.03);
        auto prf = absaf::preferred_extensions(af);
        if (prf.size() < min_prf || prf.size() > max_prf) continue;
        if (std::all_of(prf.begin(), prf.end(), [](const absaf::ArgSet& e) { return e.empty(); })) continue;
        std::vector<absaf::ArgSet> centers;
        if (rng() % 4 != 0) {
            std::uniform_int_distribution<std::size_t> pick(0, prf.size() - 1);
            for (std::size_t c = 0; c < 1 + rng() % 3; ++c)
                if (!prf[pick(rng)].empty()) centers.push_back(prf[pick(rng)]);
            centers.erase(std::remove_if(centers.begin(), centers.end(),
                                         [](const absaf::ArgSet& e) { return e.empty(); }),
                          centers.end());
        }
        auto s = random_absaf(rng, af, n_voters(rng), 0.3, centers);
        return {std::move(s), std::move(prf)};
    }
}

}  // namespace gen
