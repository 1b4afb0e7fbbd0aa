#include <random>

#include "doctest.h"

#include "absaf/axioms.hpp"
#include "absaf/fixtures.hpp"
#include "absaf/rules.hpp"
#include "support.hpp"

using namespace absaf;

namespace {

std::size_t index_of(const std::vector<ArgSet>& prf, const ArgSet& e) {
    auto it = std::find(prf.begin(), prf.end(), e);
    REQUIRE(it != prf.end());
    return static_cast<std::size_t>(it - prf.begin());
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("group-size threshold") {
    CHECK(jr_threshold(4, 2) == 2);
    CHECK(jr_threshold(5, 2) == 3);
    CHECK(jr_threshold(100, 3) == 34);
    CHECK(jr_threshold(3, 5) == 1);
}

TEST_CASE("no size-2 outcome satisfies the strong axiom on the three-way split") {
    auto s = fixtures::sjr_counterexample();
    auto prf = preferred_extensions(s.af());
    REQUIRE(prf.size() == 3);
    ScoreProfile p(s, prf, RepMode::regular);
    for (std::vector<std::size_t> o : {std::vector<std::size_t>{0, 1}, {0, 2}, {1, 2}}) {
        auto v = check_sjr(p, o);
        CHECK_FALSE(v.holds);
        CHECK(v.group.count() >= 2);
        CHECK(v.group.is_subset_of(p.cover(v.extension)));
        CHECK(check_jr(p, o).holds);
    }
    CHECK(check_sjr(p, {0, 1, 2}).holds);
}

TEST_CASE("OWA rules fail JR where MaxCov does not") {
    auto s = fixtures::owa_jr_counterexample();
    const auto& af = s.af();
    auto prf = preferred_extensions(af);
    REQUIRE(prf.size() == 3);
    const auto pi1 = index_of(prf, af.set_of({"a", "b", "c", "d"}));
    const auto pi2 = index_of(prf, af.set_of({"a", "b", "c", "e", "f", "g", "h"}));
    const auto pi3 = index_of(prf, af.set_of({"a", "b", "c", "e", "i", "j", "k"}));
    const auto bad = sorted({pi2, pi3});
    ScoreProfile p(s, prf, RepMode::regular);

    for (auto kind : {RuleKind::utilitarian, RuleKind::egalitarian, RuleKind::harmonic}) {
        RuleSpec r;
        r.kind = kind;
        CAPTURE(r.name());
        auto exact = solve_exact(p, 2, r);
        CHECK(sorted(exact.indices) == bad);
        CHECK_FALSE(check_jr(p, exact.indices).holds);
        for (auto first : {pi2, pi3}) {
            TieBreak tie{{first, first == pi2 ? pi3 : pi2, pi1}};
            auto greedy = solve_greedy(p, 2, r, {}, tie);
            CHECK(greedy.indices.front() == first);
            CHECK(sorted(greedy.indices) == bad);
            CHECK_FALSE(check_jr(p, greedy.indices).holds);
        }
    }
    RuleSpec cov;
    cov.kind = RuleKind::maxcov;
    auto exact = solve_exact(p, 2, cov);
    CHECK(exact.objective == 3);
    CHECK(check_jr(p, exact.indices).holds);
    auto greedy = solve_greedy(p, 2, cov);
    CHECK(check_jr(p, greedy.indices).holds);
}

TEST_CASE("axiom checks agree with voter-subset enumeration") {
    std::mt19937_64 rng(4242);
    std::size_t sjr_fail = 0, jr_fail = 0, total = 0;
    for (int trial = 0; trial < 150; ++trial) {
        auto inst = gen::random_instance(rng, 10);
        auto voters = oracle::voter_masks(inst.absaf);
        std::vector<oracle::Mask> prf;
        for (const auto& e : inst.prf) prf.push_back(oracle::mask_of(e));
        for (auto mode : {RepMode::regular, RepMode::core}) {
            ScoreProfile p(inst.absaf, inst.prf, mode);
            for (const auto& o : oracle::subsets_up_to(prf.size(), 3)) {
                const bool sjr = oracle::sjr(voters, prf, o, mode);
                const bool jr = oracle::jr(voters, prf, o, mode);
                CHECK(check_sjr(p, o).holds == sjr);
                CHECK(check_jr(p, o).holds == jr);
                sjr_fail += !sjr;
                jr_fail += !jr;
                ++total;
            }
        }
    }
    CHECK(sjr_fail > 0);
    CHECK(jr_fail > 0);
    CHECK(sjr_fail < total);
}

TEST_CASE("coverage maximizers satisfy JR on random instances") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto inst = gen::random_instance(rng, 12);
        ScoreProfile p(inst.absaf, inst.prf, RepMode::regular);
        RuleSpec cov;
        cov.kind = RuleKind::maxcov;
        for (std::size_t k = 1; k <= 4; ++k) {
            CHECK(check_jr(p, solve_exact(p, k, cov).indices).holds);
            CHECK(check_jr(p, solve_greedy(p, k, cov).indices).holds);
        }
    }
}
