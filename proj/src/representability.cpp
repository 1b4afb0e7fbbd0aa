#include "absaf/representability.hpp"

#include <algorithm>
#include <stdexcept>

namespace absaf {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

void check_combination_cap(std::uint64_t m, std::uint64_t k, const SearchLimits& limits) {
    auto c = binomial(m, k);
    if (c > limits.max_combinations)
        throw ResourceLimitError("C(" + std::to_string(m) + "," + std::to_string(k) + ") = " + std::to_string(c) +
                                 " combinations exceeds the cap of " + std::to_string(limits.max_combinations));
}

namespace {

class CoverSearch {
public:
    CoverSearch(const ScoreProfile& p, std::size_t size, const SearchLimits& limits)
        : p_(p), size_(size), limits_(limits), all_(VoterSet::full(p.voters())) {
        const auto m = p.extensions();
        suffix_.assign(m + 1, VoterSet(p.voters()));
        for (std::size_t e = m; e-- > 0;) suffix_[e] = suffix_[e + 1] | p.cover(e);
    }

    bool run(std::vector<std::size_t>& witness) {
        chosen_.clear();
        if (!dfs(0, VoterSet(p_.voters()))) return false;
        witness = chosen_;
        return true;
    }

private:
    bool dfs(std::size_t from, const VoterSet& covered) {
        if (chosen_.size() == size_) return covered == all_;
        if (limits_.deadline && (++ticks_ & 0xfff) == 0 && Clock::now() > *limits_.deadline)
            throw TimeoutError("representability search timed out");
        const auto m = p_.extensions();
        for (std::size_t e = from; e + (size_ - chosen_.size()) <= m; ++e) {
            if (!((covered | suffix_[e]) == all_)) return false;
            chosen_.push_back(e);
            if (dfs(e + 1, covered | p_.cover(e))) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const ScoreProfile& p_;
    std::size_t size_;
    const SearchLimits& limits_;
    VoterSet all_;
    std::vector<VoterSet> suffix_;
    std::vector<std::size_t> chosen_;
    std::uint64_t ticks_ = 0;
};

}  // namespace

RepresentabilityAnswer decide_representable(const ScoreProfile& profile, std::size_t k, const SearchLimits& limits) {
    if (k < 1 || k > profile.voters())
        throw std::invalid_argument("k must lie in 1..n (n = " + std::to_string(profile.voters()) + ")");
    const auto size = std::min(k, profile.extensions());
    check_combination_cap(profile.extensions(), size, limits);
    RepresentabilityAnswer answer;
    answer.representable = CoverSearch(profile, size, limits).run(answer.witness);
    return answer;
}

Representability decide_representable(const ABSAF& s, std::size_t k, RepMode mode, const SearchLimits& limits) {
    auto prf = preferred_extensions(s.af());
    ScoreProfile profile(s, prf, mode);
    auto answer = decide_representable(profile, k, limits);
    Representability out;
    out.representable = answer.representable;
    if (answer.representable) out.witness = outcome_from_indices(prf, answer.witness, k);
    return out;
}

std::optional<Outcome> min_perfect_outcome(const ABSAF& s, RepMode mode, const SearchLimits& limits) {
    auto prf = preferred_extensions(s.af());
    ScoreProfile profile(s, prf, mode);
    const auto last = std::min(profile.voters(), profile.extensions());
    for (std::size_t k = 1; k <= last; ++k) {
        auto answer = decide_representable(profile, k, limits);
        if (answer.representable) return outcome_from_indices(prf, answer.witness, k);
    }
    return std::nullopt;
}

SelfDefenceBound self_defence_witness(const ABSAF& s) {
    const auto& af = s.af();
    for (VoterId i = 1; i <= s.voter_count(); ++i)
        if (!is_conflict_free(af, s.approval(i)))
            throw ValidationError("ballot of voter " + std::to_string(i) + " is not conflict-free");

    auto prf = preferred_extensions(af);
    SelfDefenceBound out{Ratio::one(), {}};
    std::vector<std::size_t> picked;
    for (VoterId i = 1; i <= s.voter_count(); ++i) {
        auto sd = self_defending(s, i);
        out.alpha = std::min(out.alpha, Ratio(static_cast<std::int64_t>(sd.count()),
                                              static_cast<std::int64_t>(s.approval(i).count())));
        // SD(i) is admissible here, so some preferred extension contains it.
        auto it = std::find_if(prf.begin(), prf.end(), [&](const ArgSet& e) { return sd.is_subset_of(e); });
        if (it == prf.end()) throw std::logic_error("self-defending set outside every preferred extension");
        picked.push_back(static_cast<std::size_t>(it - prf.begin()));
    }
    std::sort(picked.begin(), picked.end());
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    out.outcome = outcome_from_indices(prf, picked, picked.size());
    return out;
}

}  // namespace absaf
