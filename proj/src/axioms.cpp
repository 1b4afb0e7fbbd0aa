#include "absaf/axioms.hpp"

#include <stdexcept>

namespace absaf {

std::size_t jr_threshold(std::size_t n, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    return (n + k - 1) / k;
}

namespace {

VoterSet covered_by(const ScoreProfile& p, const std::vector<std::size_t>& outcome) {
    VoterSet covered(p.voters());
    for (auto e : outcome) covered |= p.cover(e);
    return covered;
}

std::size_t require_outcome(const ScoreProfile& p, const std::vector<std::size_t>& outcome, std::size_t k) {
    if (outcome.empty()) throw std::invalid_argument("outcome must hold at least one viewpoint");
    for (auto e : outcome)
        if (e >= p.extensions()) throw std::invalid_argument("extension index out of range");
    if (k == 0) return outcome.size();
    if (k < outcome.size()) throw std::invalid_argument("outcome is larger than k");
    return k;
}

}  // namespace

JrVerdict check_jr(const ScoreProfile& p, const std::vector<std::size_t>& outcome, std::size_t k) {
    const auto threshold = jr_threshold(p.voters(), require_outcome(p, outcome, k));
    const auto uncovered = VoterSet::full(p.voters()) - covered_by(p, outcome);
    for (std::size_t e = 0; e < p.extensions(); ++e) {
        auto group = p.cover(e) & uncovered;
        if (group.count() >= threshold) return {false, std::move(group), e};
    }
    return {};
}

SjrVerdict check_sjr(const ScoreProfile& p, const std::vector<std::size_t>& outcome, std::size_t k) {
    const auto threshold = jr_threshold(p.voters(), require_outcome(p, outcome, k));
    for (std::size_t e = 0; e < p.extensions(); ++e) {
        const auto& group = p.cover(e);
        if (group.count() < threshold) continue;
        bool represented = false;
        for (auto w : outcome)
            if (group.is_subset_of(p.cover(w))) {
                represented = true;
                break;
            }
        if (!represented) return {false, group, e};
    }
    return {};
}

std::vector<RepresentableGroup> representable_groups(const ScoreProfile& p, std::size_t threshold) {
    if (threshold < 1) throw std::invalid_argument("threshold must be at least 1");
    std::vector<RepresentableGroup> out;
    for (std::size_t e = 0; e < p.extensions(); ++e)
        if (p.cover(e).count() >= threshold) out.push_back({e, p.cover(e)});
    return out;
}

}  // namespace absaf
