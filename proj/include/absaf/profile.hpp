#pragma once

#include <cstdint>
#include <vector>

#include "absaf/model.hpp"

namespace absaf {

/// Per-voter, per-extension representation scores under one mode. Rules, axiom checks
/// and representability all work on this table.
///
/// Scores are interned: each distinct value gets a rank in ascending order, so comparing
/// scores is comparing small integers.
class ScoreProfile {
public:
    ScoreProfile(const ABSAF& s, const std::vector<ArgSet>& preferred, RepMode mode);

    /// Score-level fixture: scores[v][e] is voter v+1's score for extension e.
    static ScoreProfile from_matrix(const std::vector<std::vector<Ratio>>& scores);

    std::size_t voters() const { return voters_; }
    std::size_t extensions() const { return extensions_; }

    const Ratio& score(std::size_t voter, std::size_t ext) const { return values_[rank(voter, ext)]; }
    std::uint32_t rank(std::size_t voter, std::size_t ext) const { return ranks_[ext * voters_ + voter]; }
    /// Ranks of every voter for one extension, contiguous.
    const std::uint32_t* ext_ranks(std::size_t ext) const { return ranks_.data() + ext * voters_; }

    /// Distinct score values, ascending.
    const std::vector<Ratio>& values() const { return values_; }
    /// Rank of the value 1; equals values().size() if no voter ever scores 1.
    std::uint32_t one_rank() const { return one_rank_; }

    /// Voters (0-based) fully represented by extension e.
    const VoterSet& cover(std::size_t ext) const { return cover_[ext]; }

private:
    ScoreProfile() = default;
    void intern(const std::vector<Ratio>& flat_ext_major);

    std::size_t voters_ = 0;
    std::size_t extensions_ = 0;
    std::vector<Ratio> values_;
    std::vector<std::uint32_t> ranks_;
    std::uint32_t one_rank_ = 0;
    std::vector<VoterSet> cover_;
};

}  // namespace absaf
