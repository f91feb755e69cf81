#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fza/dist_set.hpp"

namespace fza {

// Reserved transition-symbol token used by the file format for epsilon.
inline constexpr std::string_view kEpsilonToken = "eps";

namespace detail {

struct MachineParts {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::string initial;
    FuzzySet final_weights;
    std::set<std::string, std::less<>> state_set;
    std::set<std::string, std::less<>> symbol_set;
};

inline MachineParts validate_parts(std::vector<std::string> states,
                                   std::vector<std::string> alphabet,
                                   std::string initial,
                                   FuzzySet final_weights) {
    MachineParts parts;
    if (states.empty()) throw ValidationError("state set must be non-empty");
    for (const auto& q : states) {
        check_token(q, "state name");
        if (!parts.state_set.insert(q).second)
            throw ValidationError("duplicate state '" + q + "'");
    }
    for (const auto& a : alphabet) {
        check_token(a, "symbol");
        if (a == kEpsilonToken)
            throw ValidationError("symbol 'eps' is reserved for epsilon moves");
        if (!parts.symbol_set.insert(a).second)
            throw ValidationError("duplicate symbol '" + a + "'");
    }
    if (!parts.state_set.contains(initial))
        throw ValidationError("initial state '" + initial + "' not in state set");
    for (const auto& [q, degree] : final_weights)
        if (!parts.state_set.contains(q))
            throw ValidationError("unknown state '" + q + "' in final set");
    parts.states = std::move(states);
    parts.alphabet = std::move(alphabet);
    parts.initial = std::move(initial);
    parts.final_weights = std::move(final_weights);
    return parts;
}

inline void check_support(const MachineParts& parts, const FuzzySet& dist,
                          const std::string& from, const std::string& symbol) {
    for (const auto& [q, degree] : dist)
        if (!parts.state_set.contains(q))
            throw ValidationError("unknown state '" + q + "' in transition (" + from +
                                  ", " + symbol + ")");
}

inline void check_key(const MachineParts& parts, const std::string& from,
                      const std::string& symbol) {
    if (!parts.state_set.contains(from))
        throw ValidationError("unknown state '" + from + "' in transition table");
    if (!parts.symbol_set.contains(symbol))
        throw ValidationError("unknown symbol '" + symbol + "' in transition table");
}

} // namespace detail

// Deterministic fuzzy automaton: delta maps each (state, symbol) to a single
// possibility distribution over states. Pairs not stored map to Phi.
class Dfa {
public:
    using Delta = std::map<std::pair<std::string, std::string>, FuzzySet>;

    Dfa(std::vector<std::string> states, std::vector<std::string> alphabet,
        std::string initial, FuzzySet final_weights, Delta transitions)
        : parts_(detail::validate_parts(std::move(states), std::move(alphabet),
                                        std::move(initial), std::move(final_weights))) {
        for (auto& [key, dist] : transitions) {
            detail::check_key(parts_, key.first, key.second);
            detail::check_support(parts_, dist, key.first, key.second);
            if (!dist.empty()) delta_.emplace(key, std::move(dist));
        }
    }

    const std::vector<std::string>& states() const noexcept { return parts_.states; }
    const std::vector<std::string>& alphabet() const noexcept { return parts_.alphabet; }
    const std::string& initial() const noexcept { return parts_.initial; }
    const FuzzySet& final_weights() const noexcept { return parts_.final_weights; }
    const Delta& transitions() const noexcept { return delta_; }

    bool has_state(std::string_view q) const { return parts_.state_set.contains(q); }
    bool has_symbol(std::string_view a) const { return parts_.symbol_set.contains(a); }

    const FuzzySet& transition(const std::string& q, const std::string& a) const {
        static const FuzzySet phi;
        const auto it = delta_.find({q, a});
        return it == delta_.end() ? phi : it->second;
    }

    // Five-tuple equality; declaration order is presentation, not identity.
    bool operator==(const Dfa& other) const {
        return parts_.state_set == other.parts_.state_set &&
               parts_.symbol_set == other.parts_.symbol_set &&
               parts_.initial == other.parts_.initial &&
               parts_.final_weights == other.parts_.final_weights &&
               delta_ == other.delta_;
    }

private:
    detail::MachineParts parts_;
    Delta delta_; // non-Phi entries only
};

// Nondeterministic fuzzy automaton: delta maps each (state, symbol) to a set
// of alternative possibility distributions.
class Nfa {
public:
    using Delta = std::map<std::pair<std::string, std::string>, DistSet>;

    Nfa(std::vector<std::string> states, std::vector<std::string> alphabet,
        std::string initial, FuzzySet final_weights, Delta transitions)
        : parts_(detail::validate_parts(std::move(states), std::move(alphabet),
                                        std::move(initial), std::move(final_weights))) {
        for (auto& [key, dists] : transitions) {
            detail::check_key(parts_, key.first, key.second);
            for (const FuzzySet& mu : dists)
                detail::check_support(parts_, mu, key.first, key.second);
            if (!dists.empty()) delta_.emplace(key, std::move(dists));
        }
    }

    const std::vector<std::string>& states() const noexcept { return parts_.states; }
    const std::vector<std::string>& alphabet() const noexcept { return parts_.alphabet; }
    const std::string& initial() const noexcept { return parts_.initial; }
    const FuzzySet& final_weights() const noexcept { return parts_.final_weights; }
    const Delta& transitions() const noexcept { return delta_; }

    bool has_state(std::string_view q) const { return parts_.state_set.contains(q); }
    bool has_symbol(std::string_view a) const { return parts_.symbol_set.contains(a); }

    const DistSet& transition(const std::string& q, const std::string& a) const {
        static const DistSet none;
        const auto it = delta_.find({q, a});
        return it == delta_.end() ? none : it->second;
    }

    bool operator==(const Nfa& other) const {
        return parts_.state_set == other.parts_.state_set &&
               parts_.symbol_set == other.parts_.symbol_set &&
               parts_.initial == other.parts_.initial &&
               parts_.final_weights == other.parts_.final_weights &&
               delta_ == other.delta_;
    }

private:
    detail::MachineParts parts_;
    Delta delta_; // non-empty DistSets only
};

// Nondeterministic fuzzy automaton with epsilon moves: an Nfa whose delta is
// additionally defined on (state, epsilon), stored as a separate column.
class Enfa {
public:
    using Delta = Nfa::Delta;
    using EpsDelta = std::map<std::string, DistSet>;

    Enfa(std::vector<std::string> states, std::vector<std::string> alphabet,
         std::string initial, FuzzySet final_weights, Delta transitions,
         EpsDelta eps_transitions)
        : parts_(detail::validate_parts(std::move(states), std::move(alphabet),
                                        std::move(initial), std::move(final_weights))) {
        for (auto& [key, dists] : transitions) {
            detail::check_key(parts_, key.first, key.second);
            for (const FuzzySet& mu : dists)
                detail::check_support(parts_, mu, key.first, key.second);
            if (!dists.empty()) delta_.emplace(key, std::move(dists));
        }
        for (auto& [from, dists] : eps_transitions) {
            if (!parts_.state_set.contains(from))
                throw ValidationError("unknown state '" + from + "' in epsilon column");
            for (const FuzzySet& mu : dists)
                detail::check_support(parts_, mu, from, std::string(kEpsilonToken));
            if (!dists.empty()) eps_.emplace(from, std::move(dists));
        }
    }

    const std::vector<std::string>& states() const noexcept { return parts_.states; }
    const std::vector<std::string>& alphabet() const noexcept { return parts_.alphabet; }
    const std::string& initial() const noexcept { return parts_.initial; }
    const FuzzySet& final_weights() const noexcept { return parts_.final_weights; }
    const Delta& transitions() const noexcept { return delta_; }
    const EpsDelta& eps_transitions() const noexcept { return eps_; }

    bool has_state(std::string_view q) const { return parts_.state_set.contains(q); }
    bool has_symbol(std::string_view a) const { return parts_.symbol_set.contains(a); }

    const DistSet& transition(const std::string& q, const std::string& a) const {
        static const DistSet none;
        const auto it = delta_.find({q, a});
        return it == delta_.end() ? none : it->second;
    }

    const DistSet& eps_transition(const std::string& q) const {
        static const DistSet none;
        const auto it = eps_.find(q);
        return it == eps_.end() ? none : it->second;
    }

    bool operator==(const Enfa& other) const {
        return parts_.state_set == other.parts_.state_set &&
               parts_.symbol_set == other.parts_.symbol_set &&
               parts_.initial == other.parts_.initial &&
               parts_.final_weights == other.parts_.final_weights &&
               delta_ == other.delta_ && eps_ == other.eps_;
    }

private:
    detail::MachineParts parts_;
    Delta delta_;
    EpsDelta eps_;
};

using Machine = std::variant<Dfa, Nfa, Enfa>;

inline std::string_view kind_name(const Machine& m) {
    switch (m.index()) {
        case 0: return "dfa";
        case 1: return "nfa";
        default: return "enfa";
    }
}

inline const std::vector<std::string>& states_of(const Machine& m) {
    return std::visit([](const auto& inner) -> const std::vector<std::string>& {
        return inner.states();
    }, m);
}

inline const std::vector<std::string>& alphabet_of(const Machine& m) {
    return std::visit([](const auto& inner) -> const std::vector<std::string>& {
        return inner.alphabet();
    }, m);
}

// A Dfa is the Nfa whose alternative sets are singletons; a Phi transition
// becomes the empty alternative set.
inline Nfa embed_dfa_as_nfa(const Dfa& m) {
    Nfa::Delta delta;
    for (const auto& [key, dist] : m.transitions())
        delta.emplace(key, DistSet::of({dist}));
    return Nfa(m.states(), m.alphabet(), m.initial(), m.final_weights(), std::move(delta));
}

// Crisp NFA embedding that keeps the nondeterminism: each crisp target p
// becomes its own alternative singleton 1/p.
inline Nfa embed_crisp_nfa(std::vector<std::string> states,
                           std::vector<std::string> alphabet,
                           const std::map<std::pair<std::string, std::string>,
                                          std::vector<std::string>>& crisp_delta,
                           std::string initial,
                           const std::vector<std::string>& final_states) {
    Nfa::Delta delta;
    for (const auto& [key, targets] : crisp_delta) {
        std::vector<FuzzySet> singletons;
        singletons.reserve(targets.size());
        for (const auto& p : targets) singletons.push_back(FuzzySet::singleton(p));
        delta.emplace(key, DistSet::of(std::move(singletons)));
    }
    std::vector<std::pair<std::string, Value>> final_pairs;
    final_pairs.reserve(final_states.size());
    for (const auto& q : final_states) final_pairs.emplace_back(q, Value::one());
    return Nfa(std::move(states), std::move(alphabet), std::move(initial),
               FuzzySet::from_pairs(final_pairs), std::move(delta));
}

inline Enfa embed_nfa_as_enfa(const Nfa& m) {
    return Enfa(m.states(), m.alphabet(), m.initial(), m.final_weights(),
                m.transitions(), {});
}

// Every membership degree occurring in the machine, plus 0 and 1. Any degree
// an evaluation can produce lies in this set: min and max never leave it.
inline std::set<Value> values_of(const Dfa& m) {
    std::set<Value> out{Value::zero(), Value::one()};
    for (const auto& [q, v] : m.final_weights()) out.insert(v);
    for (const auto& [key, dist] : m.transitions())
        for (const auto& [q, v] : dist) out.insert(v);
    return out;
}

inline std::set<Value> values_of(const Nfa& m) {
    std::set<Value> out{Value::zero(), Value::one()};
    for (const auto& [q, v] : m.final_weights()) out.insert(v);
    for (const auto& [key, dists] : m.transitions())
        for (const FuzzySet& mu : dists)
            for (const auto& [q, v] : mu) out.insert(v);
    return out;
}

inline std::set<Value> values_of(const Enfa& m) {
    std::set<Value> out{Value::zero(), Value::one()};
    for (const auto& [q, v] : m.final_weights()) out.insert(v);
    for (const auto& [key, dists] : m.transitions())
        for (const FuzzySet& mu : dists)
            for (const auto& [q, v] : mu) out.insert(v);
    for (const auto& [q, dists] : m.eps_transitions())
        for (const FuzzySet& mu : dists)
            for (const auto& [p, v] : mu) out.insert(v);
    return out;
}

inline std::set<Value> values_of(const Machine& m) {
    return std::visit([](const auto& inner) { return values_of(inner); }, m);
}

} // namespace fza
