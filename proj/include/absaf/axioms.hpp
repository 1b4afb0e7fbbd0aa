#pragma once

#include <optional>
#include <vector>

#include "absaf/profile.hpp"

namespace absaf {

/// ⌈n/k⌉: the smallest integer group size with |N'| >= n/k.
std::size_t jr_threshold(std::size_t n, std::size_t k);

struct JrVerdict {
    bool holds = true;
    /// On violation: the voters (0-based) of V(pi) left without a fully representing
    /// viewpoint, and the extension pi they share.
    VoterSet group;
    std::size_t extension = 0;
};

/// Justified representation of the outcome (extension indices) for size bound k; k = 0
/// means |outcome|. Throws std::invalid_argument if the outcome is empty or larger than k.
/// Violated iff some extension fully represents at least ⌈n/k⌉ voters none of whom the
/// outcome fully represents.
JrVerdict check_jr(const ScoreProfile& p, const std::vector<std::size_t>& outcome, std::size_t k = 0);

struct SjrVerdict {
    bool holds = true;
    /// On violation: a 1-representable group of size >= ⌈n/k⌉ that no single viewpoint of
    /// the outcome fully represents, together with an extension representing it.
    VoterSet group;
    std::size_t extension = 0;
};

/// Strong justified representation. A group left uncovered by every viewpoint stays
/// uncovered when voters are added to it, so it suffices to test each maximal
/// 1-representable group V(pi) with |V(pi)| >= ⌈n/k⌉ against each viewpoint's cover set.
SjrVerdict check_sjr(const ScoreProfile& p, const std::vector<std::size_t>& outcome, std::size_t k = 0);

struct RepresentableGroup {
    std::size_t extension;
    VoterSet voters;
};

/// Extensions whose cover set V(pi) has at least `threshold` voters, with those sets.
std::vector<RepresentableGroup> representable_groups(const ScoreProfile& p, std::size_t threshold);

}  // namespace absaf
