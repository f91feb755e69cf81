#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fza/value.hpp"

namespace fza {

// Element names are opaque tokens: non-empty, no whitespace.
inline void check_token(std::string_view token, const char* what) {
    if (token.empty())
        throw ValidationError(std::string(what) + " must be a non-empty token");
    for (const char c : token)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw ValidationError(std::string(what) + " '" + std::string(token) +
                                  "' contains whitespace");
}

// Sparse fuzzy subset of a universe of named elements. Only strictly
// positive memberships are stored; the empty map is the unique
// representation of the empty set Phi.
class FuzzySet {
public:
    using Entries = std::map<std::string, Value, std::less<>>;

    FuzzySet() = default; // Phi

    static FuzzySet from_pairs(const std::vector<std::pair<std::string, Value>>& pairs) {
        FuzzySet out;
        for (const auto& [element, value] : pairs) {
            check_token(element, "element name");
            if (value.is_zero()) continue;
            if (!out.entries_.emplace(element, value).second)
                throw ValidationError("duplicate element '" + element + "'");
        }
        return out;
    }

    static FuzzySet singleton(std::string element, Value v = Value::one()) {
        FuzzySet out;
        check_token(element, "element name");
        if (!v.is_zero()) out.entries_.emplace(std::move(element), v);
        return out;
    }

    // Membership degree; 0 for elements outside the support.
    Value at(std::string_view element) const {
        const auto it = entries_.find(element);
        return it == entries_.end() ? Value::zero() : it->second;
    }

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    const Entries& entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool operator==(const FuzzySet&) const = default;

    // Total order used only for canonical storage inside DistSet.
    std::strong_ordering operator<=>(const FuzzySet& other) const {
        return std::lexicographical_compare_three_way(
            entries_.begin(), entries_.end(),
            other.entries_.begin(), other.entries_.end(),
            [](const auto& a, const auto& b) {
                if (const auto c = a.first <=> b.first; c != 0) return c;
                return a.second <=> b.second;
            });
    }

private:
    friend FuzzySet union_of(const FuzzySet&, const FuzzySet&);
    friend FuzzySet intersect(const FuzzySet&, const FuzzySet&);
    friend FuzzySet scale(Value, const FuzzySet&);

    Entries entries_;
};

inline Value height(const FuzzySet& a) {
    Value h = Value::zero();
    for (const auto& [element, value] : a) h = max(h, value);
    return h;
}

// Pointwise maximum.
inline FuzzySet union_of(const FuzzySet& a, const FuzzySet& b) {
    FuzzySet out = a;
    for (const auto& [element, value] : b) {
        auto [it, inserted] = out.entries_.emplace(element, value);
        if (!inserted) it->second = max(it->second, value);
    }
    return out;
}

// Pointwise minimum; zero minima are dropped.
inline FuzzySet intersect(const FuzzySet& a, const FuzzySet& b) {
    FuzzySet out;
    for (const auto& [element, value] : a) {
        const Value other = b.at(element);
        if (!other.is_zero()) out.entries_.emplace(element, min(value, other));
    }
    return out;
}

// Scale product: (lambda . a)(x) = lambda /\ a(x).
inline FuzzySet scale(Value lambda, const FuzzySet& a) {
    if (lambda.is_zero()) return FuzzySet();
    FuzzySet out;
    for (const auto& [element, value] : a)
        out.entries_.emplace(element, min(lambda, value));
    return out;
}

// a(x) <= b(x) for all x, i.e. a is a fuzzy subset of b.
inline bool is_subset(const FuzzySet& a, const FuzzySet& b) {
    return std::all_of(a.begin(), a.end(), [&](const auto& entry) {
        return entry.second <= b.at(entry.first);
    });
}

} // namespace fza
