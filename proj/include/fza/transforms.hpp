#pragma once

#include "fza/semantics.hpp"

namespace fza {

// Collapse each alternative set to the pointwise union of its members. The
// state set stays fixed; the languages coincide.
inline Dfa determinize(const Nfa& m) {
    Dfa::Delta delta;
    for (const auto& [key, dists] : m.transitions())
        delta.emplace(key, flatten(dists));
    return Dfa(m.states(), m.alphabet(), m.initial(), m.final_weights(),
               std::move(delta));
}

// Replace delta with the one-symbol extended delta and absorb epsilon
// reachability into the final weights: F'(q) = height(flatten(closure(q)) /\ F).
inline Nfa eliminate_epsilon(const Enfa& m,
                             std::size_t max_set = kDefaultDistSetLimit) {
    const ClosureTable closures(m, max_set);
    Nfa::Delta delta;
    for (const auto& q : m.states()) {
        DistSet from_q = closures.of_state(q);
        for (const auto& a : m.alphabet()) {
            DistSet reached = enfa_step(closures, from_q, a, max_set);
            if (!reached.empty()) delta.emplace(std::make_pair(q, a), std::move(reached));
        }
    }
    std::vector<std::pair<std::string, Value>> final_pairs;
    for (const auto& q : m.states()) {
        const Value degree =
            height(intersect(flatten(closures.of_state(q)), m.final_weights()));
        if (!degree.is_zero()) final_pairs.emplace_back(q, degree);
    }
    return Nfa(m.states(), m.alphabet(), m.initial(),
               FuzzySet::from_pairs(final_pairs), std::move(delta));
}

inline Dfa compile(const Enfa& m, std::size_t max_set = kDefaultDistSetLimit) {
    return determinize(eliminate_epsilon(m, max_set));
}

// Keep only the maximal members under pointwise order. The union of members
// is unchanged, so no language degree changes; off by default because the
// raw extended delta keeps dominated members.
inline DistSet prune_dominated(const DistSet& set) {
    std::vector<FuzzySet> kept;
    for (const FuzzySet& mu : set) {
        const bool dominated = std::any_of(set.begin(), set.end(), [&](const FuzzySet& other) {
            return !(other == mu) && is_subset(mu, other);
        });
        if (!dominated) kept.push_back(mu);
    }
    return DistSet::of(std::move(kept));
}

inline Nfa prune_dominated(const Nfa& m) {
    Nfa::Delta delta;
    for (const auto& [key, dists] : m.transitions())
        delta.emplace(key, prune_dominated(dists));
    return Nfa(m.states(), m.alphabet(), m.initial(), m.final_weights(),
               std::move(delta));
}

} // namespace fza
