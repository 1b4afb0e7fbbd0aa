#include <cmath>

#include "doctest.h"

#include "absaf/fixtures.hpp"
#include "absaf/io.hpp"
#include "absaf/model.hpp"

using namespace absaf;

namespace {

struct MinAvg {
    double min = 0, avg = 0;
};

MinAvg summarize(const ABSAF& s, const Outcome& omega, RepMode mode, const std::vector<ArgSet>& prf) {
    Ratio lo = Ratio::one();
    mpq_class sum = 0;
    for (VoterId i = 1; i <= s.voter_count(); ++i) {
        auto r = rep_outcome(s, i, omega, mode, prf);
        lo = std::min(lo, r);
        sum += r.to_mpq();
    }
    sum /= static_cast<unsigned long>(s.voter_count());
    return {lo.to_double(), sum.get_d()};
}

}  // namespace

TEST_CASE("ballot validation and voter expansion") {
    AF af({"a", "b"}, {{0, 1}});
    CHECK_THROWS_AS(ABSAF(af, {{ArgSet(2), 1}}), ValidationError);
    CHECK_THROWS_AS(ABSAF(af, {{ArgSet(2, {0}), 0}}), ValidationError);
    CHECK_THROWS_AS(ABSAF(af, {{ArgSet(3, {0}), 1}}), ValidationError);
    ABSAF s(af, {{ArgSet(2, {0}), 2}, {ArgSet(2, {1}), 1}});
    CHECK(s.voter_count() == 3);
    CHECK(s.ballot_index(2) == 0);
    CHECK(s.ballot_index(3) == 1);
    CHECK(s.approval(3) == ArgSet(2, {1}));
    CHECK_THROWS_AS(s.approval(0), std::out_of_range);
    CHECK_THROWS_AS(s.approval(4), std::out_of_range);
}

TEST_CASE("single-voter representation on the reform AF") {
    auto s = fixtures::canada();
    const auto& af = s.af();
    ABSAF one(af, {{af.set_of({"f2", "p1", "p2"}), 1}});
    auto pi1 = af.set_of({"f1", "f2", "m1"});
    auto pi2 = af.set_of({"p1", "p2", "p3", "m1"});
    auto pi3 = af.set_of({"f2", "p1", "p2", "m1"});
    CHECK(rep_point(one, 1, pi1) == Ratio(1, 3));
    CHECK(rep_point(one, 1, pi2) == Ratio(2, 3));
    CHECK(rep_point(one, 1, pi3) == Ratio::one());
    CHECK(rep_outcome(one, 1, {{pi1, pi2}, 2}, RepMode::regular) == Ratio(2, 3));
    CHECK(rep_outcome(one, 1, {{pi1, pi3}, 2}, RepMode::regular) == Ratio::one());
    CHECK_THROWS_AS(rep_outcome(one, 1, {{}, 2}, RepMode::regular), std::invalid_argument);
    CHECK_THROWS_AS(rep_outcome(one, 1, {{pi1}, 1}, RepMode::core), std::invalid_argument);
}

TEST_CASE("electorate scores for the two size-2 outcomes") {
    auto s = fixtures::canada();
    CHECK(s.voter_count() == 187);
    const auto& af = s.af();
    auto prf = preferred_extensions(af);
    Outcome o1{{af.set_of({"p1", "p2", "p3", "s1", "s2"}), af.set_of({"f2", "p1", "p2", "m1"})}, 2};
    Outcome o2{{af.set_of({"p1", "p2", "p3", "s1", "s2"}), af.set_of({"f1", "f2", "m1"})}, 2};
    auto r1 = summarize(s, o1, RepMode::regular, prf);
    auto c1 = summarize(s, o1, RepMode::core, prf);
    auto r2 = summarize(s, o2, RepMode::regular, prf);
    auto c2 = summarize(s, o2, RepMode::core, prf);
    CHECK(r1.min == 0.0);
    CHECK(c1.min == 0.0);
    CHECK(std::abs(c1.avg - 0.9706) <= 5e-4);
    CHECK(r2.min == 0.5);
    CHECK(std::abs(r2.avg - 0.9360) <= 5e-4);
    CHECK(c2.min == 0.5);
    CHECK(std::abs(c2.avg - 0.9697) <= 5e-4);
    CHECK(std::abs(r1.avg - 0.9378) <= 5e-4);
}

TEST_CASE("core representation normalizes by the best achievable overlap") {
    auto s = fixtures::undefendable();
    auto prf = preferred_extensions(s.af());
    REQUIRE(prf.size() == 2);
    const auto& af = s.af();
    CHECK(prf[0] == af.set_of({"a", "b"}));
    CHECK(prf[1] == af.set_of({"a", "c"}));
    CHECK(max_def(s, 2, prf) == 2);
    Outcome ac{{prf[1]}, 1};
    CHECK(rep_outcome(s, 2, ac, RepMode::regular) == Ratio(1, 2));
    CHECK(rep_outcome(s, 2, ac, RepMode::core, prf) == Ratio::one());
    CHECK(rep_outcome(s, 1, ac, RepMode::core, prf) == Ratio(1, 2));

    AF af2({"x", "y"}, {{0, 0}, {1, 1}});
    ABSAF nobody(af2, {{ArgSet(2, {0, 1}), 1}});
    auto prf2 = preferred_extensions(af2);
    CHECK(max_def(nobody, 1, prf2) == 0);
    CHECK(rep_outcome(nobody, 1, {{prf2[0]}, 1}, RepMode::core, prf2) == Ratio::one());
}

TEST_CASE("self-defending approvals") {
    auto s = fixtures::canada();
    const auto& af = s.af();
    ABSAF v(af, {{af.set_of({"p1", "p2", "f1", "s1", "m1"}), 1}});
    // p2 and f1 counter-attack their attackers; m1 is unattacked; p1 and s1 are not defended by themselves.
    CHECK(self_defending(v, 1) == af.set_of({"p2", "f1", "m1"}));
    AF loop({"a"}, {{0, 0}});
    ABSAF w(loop, {{ArgSet(1, {0}), 1}});
    CHECK(self_defending(w, 1) == ArgSet(1, {0}));
}

TEST_CASE("ballot and outcome files") {
    auto s = fixtures::canada();
    const auto& af = s.af();
    auto text = write_ballots_text(s);
    auto json = write_ballots_json(s);
    auto from_text = parse_ballots_text(af, text);
    auto from_json = parse_ballots_json(af, json);
    REQUIRE(from_text.size() == s.ballots().size());
    REQUIRE(from_json.size() == s.ballots().size());
    for (std::size_t b = 0; b < from_text.size(); ++b) {
        CHECK(from_text[b].approved == s.ballots()[b].approved);
        CHECK(from_text[b].multiplicity == s.ballots()[b].multiplicity);
        CHECK(from_json[b].approved == s.ballots()[b].approved);
        CHECK(from_json[b].multiplicity == s.ballots()[b].multiplicity);
    }
    CHECK(parse_ballots_json(af, R"({"ballots":[{"approved":["p1"]}]})")[0].multiplicity == 1);
    CHECK_THROWS_AS(parse_ballots_text(af, "3 : nope"), ParseError);
    CHECK_THROWS(parse_ballots_text(af, "x : p1"));
    CHECK_THROWS(parse_ballots_json(af, "{"));

    auto prf = preferred_extensions(af);
    auto o = parse_outcome(af, "# two viewpoints\np1,p2,p3,s1,s2\n\nf1, f2, m1\n", prf);
    CHECK(o.size() == 2);
    CHECK(o.viewpoints[1] == af.set_of({"f1", "f2", "m1"}));
    CHECK_THROWS_AS(parse_outcome(af, "p1\n", prf), ParseError);
    CHECK_THROWS_AS(parse_outcome(af, "f1,f2,m1\nf1,f2,m1\n", prf), ParseError);
}

TEST_CASE("mode names") {
    CHECK(parse_rep_mode("core") == RepMode::core);
    CHECK(to_string(RepMode::regular) == "regular");
    CHECK_THROWS(parse_rep_mode("other"));
}
