#include "absaf/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace absaf {

std::string to_string(RepMode mode) { return mode == RepMode::regular ? "regular" : "core"; }

RepMode parse_rep_mode(const std::string& text) {
    if (text == "regular") return RepMode::regular;
    if (text == "core") return RepMode::core;
    throw std::invalid_argument("unknown representation mode '" + text + "'");
}

ABSAF::ABSAF(AF af, std::vector<Ballot> ballots) : af_(std::move(af)), ballots_(std::move(ballots)) {
    for (std::size_t b = 0; b < ballots_.size(); ++b) {
        const auto& ballot = ballots_[b];
        if (ballot.approved.universe() != af_.size())
            throw ValidationError("ballot " + std::to_string(b + 1) + " is over a different argument set");
        if (ballot.approved.empty())
            throw ValidationError("ballot " + std::to_string(b + 1) + " approves no argument");
        if (ballot.multiplicity == 0)
            throw ValidationError("ballot " + std::to_string(b + 1) + " has multiplicity 0");
        ballot_of_voter_.insert(ballot_of_voter_.end(), ballot.multiplicity, b);
    }
}

std::size_t ABSAF::ballot_index(VoterId i) const {
    if (i == 0 || i > ballot_of_voter_.size())
        throw std::out_of_range("unknown voter id " + std::to_string(i));
    return ballot_of_voter_[i - 1];
}

const ArgSet& ABSAF::approval(VoterId i) const { return ballots_[ballot_index(i)].approved; }

Outcome outcome_from_indices(const std::vector<ArgSet>& preferred, const std::vector<std::size_t>& indices,
                             std::size_t k) {
    Outcome out;
    out.k = k;
    for (auto idx : indices) out.viewpoints.push_back(preferred.at(idx));
    return out;
}

Ratio rep_point(const ABSAF& s, VoterId i, const ArgSet& pi) {
    const auto& a = s.approval(i);
    return Ratio(static_cast<std::int64_t>(pi.intersection_count(a)), static_cast<std::int64_t>(a.count()));
}

std::size_t max_def(const ABSAF& s, VoterId i, const std::vector<ArgSet>& preferred) {
    const auto& a = s.approval(i);
    std::size_t best = 0;
    for (const auto& pi : preferred) best = std::max(best, pi.intersection_count(a));
    return best;
}

Ratio rep_core_point(const ABSAF& s, VoterId i, const ArgSet& pi, std::size_t maxdef) {
    if (maxdef == 0) return Ratio::one();
    return Ratio(static_cast<std::int64_t>(pi.intersection_count(s.approval(i))), static_cast<std::int64_t>(maxdef));
}

Ratio rep_outcome(const ABSAF& s, VoterId i, const Outcome& omega, RepMode mode,
                  const std::vector<ArgSet>& preferred) {
    if (omega.empty()) throw std::invalid_argument("representation of an empty outcome");
    Ratio best = Ratio::zero();
    if (mode == RepMode::regular) {
        for (const auto& pi : omega.viewpoints) best = std::max(best, rep_point(s, i, pi));
    } else {
        if (preferred.empty()) throw std::invalid_argument("core representation needs the preferred extensions");
        const auto md = max_def(s, i, preferred);
        for (const auto& pi : omega.viewpoints) best = std::max(best, rep_core_point(s, i, pi, md));
    }
    return best;
}

ArgSet self_defending(const ABSAF& s, VoterId i) {
    const auto& af = s.af();
    const auto& a = s.approval(i);
    ArgSet out(af.size());
    for (auto x : a.members())
        if (af.attackers_of(x).is_subset_of(af.targets_of(x))) out.set(x);
    return out;
}

}  // namespace absaf
