#include <random>

#include "doctest.h"

#include "absaf/fixtures.hpp"
#include "absaf/representability.hpp"
#include "support.hpp"

using namespace absaf;

TEST_CASE("binomial and the combination cap") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(200, 100) == UINT64_MAX);
    SearchLimits l;
    l.max_combinations = 100;
    CHECK_NOTHROW(check_combination_cap(10, 2, l));
    CHECK_THROWS_AS(check_combination_cap(10, 3, l), ResourceLimitError);
}

TEST_CASE("representability of the reform electorate") {
    auto s = fixtures::canada();
    // Some voters approve mutually attacking arguments, so no outcome 1-represents them.
    for (std::size_t k = 1; k <= 8; ++k) CHECK_FALSE(decide_representable(s, k, RepMode::regular).representable);
    CHECK_FALSE(min_perfect_outcome(s, RepMode::regular).has_value());

    auto core = min_perfect_outcome(s, RepMode::core);
    REQUIRE(core.has_value());
    auto prf = preferred_extensions(s.af());
    for (VoterId i = 1; i <= s.voter_count(); ++i) CHECK(rep_outcome(s, i, *core, RepMode::core, prf).is_one());
    CHECK_FALSE(decide_representable(s, core->size() - 1, RepMode::core).representable);

    CHECK_THROWS_AS(decide_representable(s, 0, RepMode::regular), std::invalid_argument);
    CHECK_THROWS_AS(decide_representable(s, 188, RepMode::regular), std::invalid_argument);
}

TEST_CASE("witness is the first working combination") {
    auto p = ScoreProfile::from_matrix({{Ratio::one(), Ratio::zero(), Ratio::one()},
                                        {Ratio::zero(), Ratio::one(), Ratio::one()}});
    auto one = decide_representable(p, 1);
    CHECK(one.representable);
    CHECK(one.witness == std::vector<std::size_t>{2});
    auto two = decide_representable(p, 2);
    CHECK(two.witness == std::vector<std::size_t>{0, 1});
}

TEST_CASE("decision agrees with exhaustive search") {
    std::mt19937_64 rng(7);
    std::size_t yes = 0, no = 0;
    for (int trial = 0; trial < 150; ++trial) {
        auto inst = gen::random_instance(rng);
        auto voters = oracle::voter_masks(inst.absaf);
        std::vector<oracle::Mask> prf;
        for (const auto& e : inst.prf) prf.push_back(oracle::mask_of(e));
        for (auto mode : {RepMode::regular, RepMode::core}) {
            ScoreProfile p(inst.absaf, inst.prf, mode);
            for (std::size_t k = 1; k <= std::min<std::size_t>(inst.absaf.voter_count(), 4); ++k) {
                auto got = decide_representable(p, k);
                bool expected = oracle::representable(voters, prf, k, mode);
                CHECK(got.representable == expected);
                (expected ? yes : no) += 1;
                if (got.representable) {
                    CHECK(got.witness.size() <= k);
                    auto sc = oracle::outcome_scores(voters, prf, got.witness, mode);
                    for (const auto& x : sc) CHECK(x == 1);
                }
            }
        }
    }
    CHECK(yes > 50);
    CHECK(no > 50);
}

TEST_CASE("self-defending lower bound") {
    auto s = fixtures::canada();
    CHECK_THROWS_AS(self_defence_witness(s), ValidationError);

    std::mt19937_64 rng(99);
    int checked = 0;
    while (checked < 60) {
        auto af = gen::random_af(rng, 3 + rng() % 8, 0.2, 0.05);
        std::vector<Ballot> ballots;
        for (int v = 0; v < 5; ++v) {
            // a random conflict-free ballot built greedily
            ArgSet b(af.size());
            for (std::size_t a = 0; a < af.size(); ++a) {
                if (rng() % 2) continue;
                auto trial = b;
                trial.set(a);
                if (is_conflict_free(af, trial)) b = trial;
            }
            if (!b.empty()) ballots.push_back({b, 1});
        }
        if (ballots.empty()) continue;
        ABSAF e(af, ballots);
        auto bound = self_defence_witness(e);
        for (VoterId i = 1; i <= e.voter_count(); ++i) {
            auto sd = self_defending(e, i);
            CHECK(Ratio(static_cast<std::int64_t>(sd.count()), static_cast<std::int64_t>(e.approval(i).count())) >=
                  bound.alpha);
            if (!bound.outcome.empty()) CHECK(rep_outcome(e, i, bound.outcome, RepMode::regular) >= bound.alpha);
        }
        ++checked;
    }
}
