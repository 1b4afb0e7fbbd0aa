#include "absaf/af.hpp"

#include <algorithm>
#include <cstdint>

namespace absaf {

AF::AF(std::vector<std::string> labels, std::vector<std::pair<ArgId, ArgId>> attacks)
    : labels_(std::move(labels)) {
    const auto n = labels_.size();
    for (ArgId a = 0; a < n; ++a) {
        if (!index_.emplace(labels_[a], a).second)
            throw ValidationError("duplicate argument label '" + labels_[a] + "'");
    }
    attackers_.assign(n, ArgSet(n));
    targets_.assign(n, ArgSet(n));
    attacker_list_.assign(n, {});
    for (auto [from, to] : attacks) {
        if (from >= n || to >= n)
            throw ValidationError("attack endpoint out of range");
        if (targets_[from].test(to))
            throw ValidationError("duplicate attack (" + labels_[from] + "," + labels_[to] + ")");
        targets_[from].set(to);
        attackers_[to].set(from);
        attacker_list_[to].push_back(from);
        attacks_.emplace_back(from, to);
    }
}

std::optional<ArgId> AF::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ArgId AF::id(std::string_view label) const {
    auto found = find(label);
    if (!found) throw ValidationError("unknown argument '" + std::string(label) + "'");
    return *found;
}

ArgSet AF::set_of(const std::vector<std::string>& labels) const {
    ArgSet s(size());
    for (const auto& l : labels) s.set(id(l));
    return s;
}

std::vector<std::string> AF::labels_of(const ArgSet& s) const {
    std::vector<std::string> out;
    for (auto a : s.members()) out.push_back(labels_[a]);
    return out;
}

ArgSet attacked_set(const AF& af, const ArgSet& s) {
    ArgSet out(af.size());
    for (auto a = s.next(0); a < af.size(); a = s.next(a + 1)) out |= af.targets_of(a);
    return out;
}

bool is_conflict_free(const AF& af, const ArgSet& s) {
    for (auto a = s.next(0); a < af.size(); a = s.next(a + 1))
        if (af.targets_of(a).intersects(s)) return false;
    return true;
}

bool is_defended(const AF& af, const ArgSet& s, ArgId a) {
    return af.attackers_of(a).is_subset_of(attacked_set(af, s));
}

bool is_admissible(const AF& af, const ArgSet& s) {
    if (!is_conflict_free(af, s)) return false;
    const auto plus = attacked_set(af, s);
    for (auto a = s.next(0); a < af.size(); a = s.next(a + 1))
        if (!af.attackers_of(a).is_subset_of(plus)) return false;
    return true;
}

namespace {

enum class Label : std::uint8_t { none, in, out, undec };

// Complete-labelling search. Every preferred extension is the in-set of some complete
// labelling, so enumerating complete labellings and keeping the maximal in-sets is exact.
class LabellingSearch {
public:
    LabellingSearch(const AF& af, const EnumerationLimits& limits) : af_(af), limits_(limits) {}

    std::vector<ArgSet> run() {
        std::vector<Label> labels(af_.size(), Label::none);
        search(labels);
        return std::move(found_);
    }

private:
    // Forces labels implied by the complete-labelling conditions. False on contradiction.
    bool propagate(std::vector<Label>& labels) const {
        const auto n = af_.size();
        bool changed = true;
        while (changed) {
            changed = false;
            for (ArgId a = 0; a < n; ++a) {
                std::size_t n_in = 0, n_undec = 0, n_none = 0;
                ArgId last_none = n;
                for (auto b : af_.attacker_list(a)) {
                    switch (labels[b]) {
                        case Label::in: ++n_in; break;
                        case Label::undec: ++n_undec; break;
                        case Label::none: ++n_none; last_none = b; break;
                        case Label::out: break;
                    }
                }
                switch (labels[a]) {
                    case Label::in:
                        if (n_in + n_undec > 0) return false;
                        if (n_none > 0) {
                            for (auto b : af_.attacker_list(a))
                                if (labels[b] == Label::none) labels[b] = Label::out;
                            changed = true;
                        }
                        break;
                    case Label::out:
                        if (n_in == 0 && n_none == 0) return false;
                        if (n_in == 0 && n_none == 1) {
                            labels[last_none] = Label::in;
                            changed = true;
                        }
                        break;
                    case Label::undec:
                        if (n_in > 0) return false;
                        if (n_undec == 0 && n_none == 0) return false;
                        if (n_undec == 0 && n_none == 1) {
                            labels[last_none] = Label::undec;
                            changed = true;
                        }
                        break;
                    case Label::none:
                        if (n_in > 0) {
                            labels[a] = Label::out;
                            changed = true;
                        } else if (n_none == 0 && n_undec == 0) {
                            labels[a] = Label::in;
                            changed = true;
                        }
                        break;
                }
            }
        }
        return true;
    }

    void search(std::vector<Label>& labels) {
        if (++nodes_ > limits_.max_nodes)
            throw ResourceLimitError("preferred enumeration exceeded " + std::to_string(limits_.max_nodes) +
                                     " search nodes");
        if (!propagate(labels)) return;

        ArgSet reachable(af_.size());
        ArgId branch = af_.size();
        for (ArgId a = 0; a < af_.size(); ++a) {
            if (labels[a] == Label::in || labels[a] == Label::none) reachable.set(a);
            if (labels[a] == Label::none && branch == af_.size()) branch = a;
        }
        // The final in-set lies inside `reachable`; a known complete extension covering it
        // means this branch can only produce non-maximal sets.
        for (const auto& e : found_)
            if (reachable.is_subset_of(e)) return;

        if (branch == af_.size()) {
            if (found_.size() >= limits_.max_extensions)
                throw ResourceLimitError("preferred enumeration exceeded " +
                                         std::to_string(limits_.max_extensions) + " candidate extensions");
            found_.push_back(std::move(reachable));
            return;
        }
        for (auto choice : {Label::in, Label::out, Label::undec}) {
            auto next = labels;
            next[branch] = choice;
            search(next);
        }
    }

    const AF& af_;
    const EnumerationLimits& limits_;
    std::size_t nodes_ = 0;
    std::vector<ArgSet> found_;
};

}  // namespace

std::vector<ArgSet> preferred_extensions(const AF& af, const EnumerationLimits& limits) {
    if (af.size() > limits.max_arguments)
        throw ResourceLimitError("AF has " + std::to_string(af.size()) + " arguments, cap is " +
                                 std::to_string(limits.max_arguments));
    auto candidates = LabellingSearch(af, limits).run();

    std::sort(candidates.begin(), candidates.end(),
              [](const ArgSet& a, const ArgSet& b) { return a.count() > b.count(); });
    std::vector<ArgSet> maximal;
    for (auto& c : candidates) {
        bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                     [&](const ArgSet& m) { return c.is_subset_of(m); });
        if (!dominated) maximal.push_back(std::move(c));
    }
    std::sort(maximal.begin(), maximal.end(), canonical_less);
    return maximal;
}

bool credulously_accepted(const std::vector<ArgSet>& preferred, ArgId a) {
    return std::any_of(preferred.begin(), preferred.end(), [&](const ArgSet& e) { return e.test(a); });
}

bool credulously_accepted(const AF& af, ArgId a, const EnumerationLimits& limits) {
    return credulously_accepted(preferred_extensions(af, limits), a);
}

}  // namespace absaf
