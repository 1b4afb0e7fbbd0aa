#include <map>
#include <set>

#include <boost/math/distributions/chi_squared.hpp>

#include "doctest.h"

#include "absaf/generators.hpp"

using namespace absaf;

TEST_CASE("random streams are reproducible and independent of draw order") {
    Rng a(5), b(5);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    Rng root(5);
    auto c1 = root.child(1).next();
    auto c0 = root.child(0).next();
    CHECK(c1 == Rng(5).child(1).next());
    CHECK(c0 != c1);
    Rng r(1);
    for (int i = 0; i < 1000; ++i) {
        auto x = r.uniform01();
        CHECK((x >= 0.0 && x < 1.0));
        CHECK(r.uniform_index(7) < 7);
    }
    CHECK_THROWS(r.uniform_index(0));
}

TEST_CASE("attack graph generator") {
    SUBCASE("smallest graph") {
        auto af = gen_af({2, 0.0, 1, 3});
        CHECK(af.size() == 2);
        REQUIRE(af.attacks().size() == 1);
        CHECK(af.attacks()[0] == std::pair<ArgId, ArgId>{1, 0});
    }
    SUBCASE("acyclic without counter-attacks") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto af = gen_af({30, 0.0, 2, seed});
            CHECK(af.attacks().size() == 1 + 2 * 28);
            for (auto [from, to] : af.attacks()) CHECK(from > to);
            CHECK(preferred_extensions(af).size() == 1);
        }
    }
    SUBCASE("counter-attacks close 2-cycles") {
        auto af = gen_af({40, 1.0, 1, 11});
        std::size_t back = 0;
        std::set<ArgId> attacked;
        for (auto [from, to] : af.attacks()) {
            if (from > to) attacked.insert(to);
            if (from < to) {
                ++back;
                CHECK(af.attacks(to, from));
            }
        }
        // every attacked argument answers exactly one of its attackers
        CHECK(back == attacked.size());
    }
    SUBCASE("deterministic in the seed") {
        auto a = gen_af({25, 0.4, 1, 77});
        auto b = gen_af({25, 0.4, 1, 77});
        auto c = gen_af({25, 0.4, 1, 78});
        CHECK(a.attacks() == b.attacks());
        CHECK(a.attacks() != c.attacks());
        CHECK(a.label(0) == "a1");
    }
    SUBCASE("parameter checks") {
        CHECK_THROWS(gen_af({1, 0.5, 1, 0}));
        CHECK_THROWS(gen_af({5, 0.5, 5, 0}));
        CHECK_THROWS(gen_af({5, 1.5, 1, 0}));
    }
    SUBCASE("filtering by extension count") {
        auto af = gen_until([](std::size_t t) { return GenParams{20, 0.5, 1, 1000 + t}; },
                            [](const AF& f) { return preferred_extensions(f).size() >= 4; }, 500);
        CHECK(preferred_extensions(af).size() >= 4);
        CHECK_THROWS_AS(gen_until([](std::size_t t) { return GenParams{5, 0.0, 1, t}; },
                                  [](const AF& f) { return preferred_extensions(f).size() > 1; }, 20),
                        ResourceLimitError);
    }
}

TEST_CASE("ground truths and ballots") {
    Rng rng(3);
    auto t = sample_ground_truths(10, 4, rng);
    CHECK(t.size() == 4);
    CHECK(std::is_sorted(t.begin(), t.end()));
    CHECK(std::adjacent_find(t.begin(), t.end()) == t.end());
    CHECK_THROWS(sample_ground_truths(3, 4, rng));

    ArgSet truth(8, {1, 4, 6});
    for (int i = 0; i < 500; ++i) {
        auto b = sample_ballot({0.0, truth}, rng);
        CHECK_FALSE(b.empty());
        CHECK(b.is_subset_of(truth));
        CHECK(mallows_distance(truth, b) == 0);
    }
    CHECK(mallows_distance(truth, ArgSet(8, {0, 1, 2})) == 2);
    CHECK_THROWS(sample_ballot({0.5, ArgSet(8)}, rng));
    CHECK_THROWS(sample_ballot({-0.1, truth}, rng));
}

TEST_CASE("uniform ballots when dispersion is 1") {
    // 2^4 - 1 nonempty subsets, each equally likely
    Rng rng(8);
    ArgSet truth(4, {0});
    std::map<std::uint32_t, int> freq;
    const int draws = 30000;
    for (int i = 0; i < draws; ++i) {
        auto b = sample_ballot({1.0, truth}, rng);
        std::uint32_t m = 0;
        for (auto a : b.members()) m |= 1u << a;
        ++freq[m];
    }
    CHECK(freq.size() == 15);
    double stat = 0, expected = draws / 15.0;
    for (auto [m, c] : freq) stat += (c - expected) * (c - expected) / expected;
    boost::math::chi_squared dist(14);
    CHECK(stat < boost::math::quantile(boost::math::complement(dist, 0.001)));
}

TEST_CASE("electorate assembly") {
    auto af = gen_af({12, 0.6, 1, 21});
    auto prf = preferred_extensions(af);
    std::vector<ArgSet> truths;
    for (const auto& e : prf)
        if (!e.empty() && truths.size() < 5) truths.push_back(e);
    REQUIRE_FALSE(truths.empty());
    auto el = build_absaf(af, truths, 20, 0.0, 9);
    CHECK(el.absaf.voter_count() == 20 * truths.size());
    for (VoterId i = 1; i <= el.absaf.voter_count(); ++i)
        CHECK(el.absaf.approval(i).is_subset_of(truths[el.truth_of_voter[i - 1]]));
    auto again = build_absaf(af, truths, 20, 0.0, 9);
    for (VoterId i = 1; i <= el.absaf.voter_count(); ++i) CHECK(again.absaf.approval(i) == el.absaf.approval(i));

    // quotas shift later voters but leave earlier ones alone
    std::vector<std::size_t> quota(truths.size(), 20);
    quota.back() += 3;
    auto padded = build_absaf(af, truths, quota, 0.0, 9);
    CHECK(padded.absaf.voter_count() == el.absaf.voter_count() + 3);
    CHECK(padded.absaf.approval(1) == el.absaf.approval(1));
    CHECK_THROWS(build_absaf(af, truths, 0, 0.5, 1));
}
