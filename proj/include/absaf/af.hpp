#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "absaf/bitset.hpp"
#include "absaf/errors.hpp"

namespace absaf {

using ArgId = std::size_t;
using ArgSet = Bitset;

struct Argument {
    ArgId id;
    std::string label;
};

/// Argumentation framework: arguments with dense ids and a directed attack relation.
/// Immutable after construction.
class AF {
public:
    AF() = default;

    /// Throws ValidationError on duplicate labels, out-of-range endpoints or duplicate attacks.
    AF(std::vector<std::string> labels, std::vector<std::pair<ArgId, ArgId>> attacks);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(ArgId a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<ArgId> find(std::string_view label) const;
    /// Throws ValidationError for an unknown label.
    ArgId id(std::string_view label) const;

    /// Attacks in insertion order.
    const std::vector<std::pair<ArgId, ArgId>>& attacks() const { return attacks_; }
    bool attacks(ArgId from, ArgId to) const { return targets_[from].test(to); }

    const ArgSet& attackers_of(ArgId a) const { return attackers_[a]; }
    const ArgSet& targets_of(ArgId a) const { return targets_[a]; }
    const std::vector<ArgId>& attacker_list(ArgId a) const { return attacker_list_[a]; }

    ArgSet empty_set() const { return ArgSet(size()); }
    /// Builds a set from labels; throws ValidationError for unknown labels.
    ArgSet set_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(const ArgSet& s) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, ArgId> index_;
    std::vector<std::pair<ArgId, ArgId>> attacks_;
    std::vector<ArgSet> attackers_;
    std::vector<ArgSet> targets_;
    std::vector<std::vector<ArgId>> attacker_list_;
};

enum class AfFormat { apx, tgf };

/// Arguments are numbered in order of first appearance.
AF parse_af(std::string_view text, AfFormat format);
AF load_af(const std::string& path, std::optional<AfFormat> format = std::nullopt);
std::string write_apx(const AF& af);

/// S+ : every argument attacked by some member of s.
ArgSet attacked_set(const AF& af, const ArgSet& s);
bool is_conflict_free(const AF& af, const ArgSet& s);
bool is_defended(const AF& af, const ArgSet& s, ArgId a);
bool is_admissible(const AF& af, const ArgSet& s);

struct EnumerationLimits {
    std::size_t max_nodes = 5'000'000;
    std::size_t max_extensions = 1'000'000;
    std::size_t max_arguments = 4096;
};

/// All subset-maximal admissible sets, in canonical order (see canonical_less).
/// Never empty: an AF whose only admissible set is the empty set yields {empty}.
/// Throws ResourceLimitError when a cap in `limits` is exceeded.
std::vector<ArgSet> preferred_extensions(const AF& af, const EnumerationLimits& limits = {});

bool credulously_accepted(const AF& af, ArgId a, const EnumerationLimits& limits = {});
bool credulously_accepted(const std::vector<ArgSet>& preferred, ArgId a);

}  // namespace absaf
