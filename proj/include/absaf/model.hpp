#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "absaf/af.hpp"
#include "absaf/ratio.hpp"

namespace absaf {

/// Voters are identified by 1..n, matching how ballots are listed.
using VoterId = std::size_t;
using VoterSet = Bitset;  // indexed by voter id - 1

struct Ballot {
    ArgSet approved;
    std::size_t multiplicity = 1;
};

enum class RepMode { regular, core };

std::string to_string(RepMode mode);
RepMode parse_rep_mode(const std::string& text);

/// An AF plus approval ballots. Ballots are stored compressed (identical voters share
/// one entry with a multiplicity) and expanded to voter ids 1..n in listing order.
class ABSAF {
public:
    /// Throws ValidationError for empty ballots, zero multiplicities, or ballots over a
    /// different argument universe.
    ABSAF() = default;
    ABSAF(AF af, std::vector<Ballot> ballots);

    const AF& af() const { return af_; }
    const std::vector<Ballot>& ballots() const { return ballots_; }

    std::size_t voter_count() const { return ballot_of_voter_.size(); }
    /// Throws std::out_of_range for an id outside 1..n.
    const ArgSet& approval(VoterId i) const;
    /// Index into ballots() for voter i.
    std::size_t ballot_index(VoterId i) const;

private:
    AF af_;
    std::vector<Ballot> ballots_;
    std::vector<std::size_t> ballot_of_voter_;
};

/// A set of viewpoints (preferred extensions) together with the intended size bound.
struct Outcome {
    std::vector<ArgSet> viewpoints;
    std::size_t k = 0;

    std::size_t size() const { return viewpoints.size(); }
    bool empty() const { return viewpoints.empty(); }
};

/// Builds an outcome from indices into a canonical extension list.
Outcome outcome_from_indices(const std::vector<ArgSet>& preferred, const std::vector<std::size_t>& indices,
                             std::size_t k);

/// Fraction of voter i's approvals contained in pi.
Ratio rep_point(const ABSAF& s, VoterId i, const ArgSet& pi);

/// Largest number of voter i's approvals any preferred extension contains.
std::size_t max_def(const ABSAF& s, VoterId i, const std::vector<ArgSet>& preferred);

/// |pi ∩ A_i| / maxdef, or 1 when maxdef is 0.
Ratio rep_core_point(const ABSAF& s, VoterId i, const ArgSet& pi, std::size_t maxdef);

/// Best representation any viewpoint of omega gives voter i. Core mode needs the preferred
/// extensions to compute maxDef. Throws std::invalid_argument on an empty outcome.
Ratio rep_outcome(const ABSAF& s, VoterId i, const Outcome& omega, RepMode mode,
                  const std::vector<ArgSet>& preferred = {});

/// Approved arguments that counter-attack every one of their attackers. The formula is
/// evaluated literally: a pure self-attacker counts as self-defending.
ArgSet self_defending(const ABSAF& s, VoterId i);

}  // namespace absaf
