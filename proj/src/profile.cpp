#include "absaf/profile.hpp"

#include <algorithm>
#include <stdexcept>

namespace absaf {

ScoreProfile::ScoreProfile(const ABSAF& s, const std::vector<ArgSet>& preferred, RepMode mode)
    : voters_(s.voter_count()), extensions_(preferred.size()) {
    // Scores only depend on the ballot, so compute once per distinct ballot.
    const auto& ballots = s.ballots();
    std::vector<std::vector<Ratio>> per_ballot(ballots.size(), std::vector<Ratio>(extensions_));
    for (std::size_t b = 0; b < ballots.size(); ++b) {
        const auto& a = ballots[b].approved;
        std::size_t maxdef = 0;
        for (const auto& pi : preferred) maxdef = std::max(maxdef, pi.intersection_count(a));
        for (std::size_t e = 0; e < extensions_; ++e) {
            const auto hit = static_cast<std::int64_t>(preferred[e].intersection_count(a));
            if (mode == RepMode::regular)
                per_ballot[b][e] = Ratio(hit, static_cast<std::int64_t>(a.count()));
            else
                per_ballot[b][e] = maxdef == 0 ? Ratio::one() : Ratio(hit, static_cast<std::int64_t>(maxdef));
        }
    }
    std::vector<Ratio> flat(extensions_ * voters_);
    for (std::size_t e = 0; e < extensions_; ++e)
        for (VoterId i = 1; i <= voters_; ++i) flat[e * voters_ + (i - 1)] = per_ballot[s.ballot_index(i)][e];
    intern(flat);
}

ScoreProfile ScoreProfile::from_matrix(const std::vector<std::vector<Ratio>>& scores) {
    ScoreProfile p;
    p.voters_ = scores.size();
    p.extensions_ = scores.empty() ? 0 : scores.front().size();
    std::vector<Ratio> flat(p.extensions_ * p.voters_);
    for (std::size_t v = 0; v < p.voters_; ++v) {
        if (scores[v].size() != p.extensions_) throw std::invalid_argument("ragged score matrix");
        for (std::size_t e = 0; e < p.extensions_; ++e) {
            if (scores[v][e] > Ratio::one()) throw std::invalid_argument("score above 1");
            flat[e * p.voters_ + v] = scores[v][e];
        }
    }
    p.intern(flat);
    return p;
}

void ScoreProfile::intern(const std::vector<Ratio>& flat) {
    values_ = flat;
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    ranks_.resize(flat.size());
    for (std::size_t x = 0; x < flat.size(); ++x)
        ranks_[x] = static_cast<std::uint32_t>(std::lower_bound(values_.begin(), values_.end(), flat[x]) - values_.begin());
    auto one = std::lower_bound(values_.begin(), values_.end(), Ratio::one());
    one_rank_ = (one != values_.end() && *one == Ratio::one()) ? static_cast<std::uint32_t>(one - values_.begin())
                                                              : static_cast<std::uint32_t>(values_.size());
    cover_.assign(extensions_, VoterSet(voters_));
    for (std::size_t e = 0; e < extensions_; ++e)
        for (std::size_t v = 0; v < voters_; ++v)
            if (ranks_[e * voters_ + v] == one_rank_) cover_[e].set(v);
}

}  // namespace absaf
