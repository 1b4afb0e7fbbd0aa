#pragma once

#include <optional>
#include <vector>

#include "absaf/limits.hpp"
#include "absaf/model.hpp"
#include "absaf/profile.hpp"

namespace absaf {

struct RepresentabilityAnswer {
    bool representable = false;
    /// Indices into the canonical extension list; empty when not representable.
    std::vector<std::size_t> witness;
};

/// Is there an outcome of at most k preferred extensions 1-(core-)representing every voter?
/// Enumerates the min(k, m)-combinations of extensions in lexicographic order and returns
/// the first that works. Throws std::invalid_argument unless 1 <= k <= n, and
/// ResourceLimitError when C(m, min(k, m)) exceeds the cap.
RepresentabilityAnswer decide_representable(const ScoreProfile& profile, std::size_t k,
                                            const SearchLimits& limits = {});

struct Representability {
    bool representable = false;
    Outcome witness;
};

Representability decide_representable(const ABSAF& s, std::size_t k, RepMode mode, const SearchLimits& limits = {});

/// Smallest-k witness found by trying k = 1, 2, ... . In core mode a witness always exists;
/// in regular mode std::nullopt means no outcome of any size 1-represents everyone.
std::optional<Outcome> min_perfect_outcome(const ABSAF& s, RepMode mode, const SearchLimits& limits = {});

struct SelfDefenceBound {
    /// min over voters of |SD(i)| / |A_i|.
    Ratio alpha;
    /// One preferred extension containing SD(i) per voter, deduplicated, canonical order.
    Outcome outcome;
};

/// Constructive lower bound for conflict-free ballots: every voter is alpha-represented by
/// the returned outcome. Throws ValidationError naming the first voter whose ballot is not
/// conflict-free.
SelfDefenceBound self_defence_witness(const ABSAF& s);

}  // namespace absaf
