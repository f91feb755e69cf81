#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "fza/fuzzy_set.hpp"

namespace fza {

// Set of possibility distributions, kept sorted and deduplicated. The empty
// distribution Phi is never a member: a transition alternative that reaches
// nothing contributes nothing to the language.
class DistSet {
public:
    DistSet() = default;

    static DistSet of(std::vector<FuzzySet> members) {
        DistSet out;
        std::erase_if(members, [](const FuzzySet& m) { return m.empty(); });
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.members_ = std::move(members);
        return out;
    }

    // Returns false when mu is Phi or already present.
    bool insert(FuzzySet mu) {
        if (mu.empty()) return false;
        const auto it = std::lower_bound(members_.begin(), members_.end(), mu);
        if (it != members_.end() && *it == mu) return false;
        members_.insert(it, std::move(mu));
        return true;
    }

    bool contains(const FuzzySet& mu) const {
        return std::binary_search(members_.begin(), members_.end(), mu);
    }

    bool empty() const noexcept { return members_.empty(); }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<FuzzySet>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool operator==(const DistSet&) const = default;

private:
    std::vector<FuzzySet> members_;
};

// Pointwise union of all members; Phi for the empty set.
inline FuzzySet flatten(const DistSet& set) {
    FuzzySet out;
    for (const FuzzySet& mu : set) out = union_of(out, mu);
    return out;
}

} // namespace fza
