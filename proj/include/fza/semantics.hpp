#pragma once

#include <span>
#include <variant>
#include <vector>

#include "fza/machine.hpp"

namespace fza {

// Cap on the size of any intermediate distribution set. The theoretical
// bound is (|values_of(M)|+1)^|Q|; the cap exists so a runaway evaluation
// raises a resource error instead of exhausting memory.
inline constexpr std::size_t kDefaultDistSetLimit = 100000;

namespace detail {

inline void check_set_limit(const DistSet& set, std::size_t max_set) {
    if (set.size() > max_set)
        throw ResourceLimitError("distribution set exceeds limit of " +
                                 std::to_string(max_set) + " members");
}

template <typename M>
void check_tokens(const M& m, std::span<const std::string> tokens) {
    for (const auto& a : tokens)
        if (!m.has_symbol(a))
            throw ValidationError("unknown symbol '" + a + "'");
}

} // namespace detail

// ---- Deterministic fuzzy automata ----------------------------------------

// One max-min composition step: union over p in supp(cur) of cur(p).delta(p,a).
inline FuzzySet dfa_step(const Dfa& m, const FuzzySet& cur, const std::string& a) {
    FuzzySet next;
    for (const auto& [p, degree] : cur)
        next = union_of(next, scale(degree, m.transition(p, a)));
    return next;
}

inline FuzzySet dfa_extended_delta(const Dfa& m, const std::string& q,
                                   std::span<const std::string> s) {
    if (!m.has_state(q)) throw ValidationError("unknown state '" + q + "'");
    detail::check_tokens(m, s);
    FuzzySet cur = FuzzySet::singleton(q);
    for (const auto& a : s) cur = dfa_step(m, cur, a);
    return cur;
}

inline Value dfa_language_degree(const Dfa& m, std::span<const std::string> s) {
    return height(intersect(dfa_extended_delta(m, m.initial(), s), m.final_weights()));
}

// ---- Nondeterministic fuzzy automata -------------------------------------

inline DistSet nfa_step(const Nfa& m, const DistSet& cur, const std::string& a,
                        std::size_t max_set = kDefaultDistSetLimit) {
    DistSet next;
    for (const FuzzySet& mu : cur)
        for (const auto& [p, degree] : mu)
            for (const FuzzySet& mu_p : m.transition(p, a)) {
                next.insert(scale(degree, mu_p));
                detail::check_set_limit(next, max_set);
            }
    return next;
}

inline DistSet nfa_extended_delta(const Nfa& m, const std::string& q,
                                  std::span<const std::string> s,
                                  std::size_t max_set = kDefaultDistSetLimit) {
    if (!m.has_state(q)) throw ValidationError("unknown state '" + q + "'");
    detail::check_tokens(m, s);
    DistSet cur = DistSet::of({FuzzySet::singleton(q)});
    for (const auto& a : s) cur = nfa_step(m, cur, a, max_set);
    return cur;
}

// sup over the reached alternatives of height(mu /\ F); 0 for the empty set.
inline Value degree_of_set(const DistSet& set, const FuzzySet& final_weights) {
    Value best = Value::zero();
    for (const FuzzySet& mu : set)
        best = max(best, height(intersect(mu, final_weights)));
    return best;
}

inline Value nfa_language_degree(const Nfa& m, std::span<const std::string> s,
                                 std::size_t max_set = kDefaultDistSetLimit) {
    return degree_of_set(nfa_extended_delta(m, m.initial(), s, max_set),
                         m.final_weights());
}

// ---- Epsilon closures and epsilon-NFAs ------------------------------------

// delta_eps(q, eps) = {1/q} u delta(q, eps): one silent step, or none.
inline DistSet eps_one_step(const Enfa& m, const std::string& q) {
    DistSet out = m.eps_transition(q);
    out.insert(FuzzySet::singleton(q));
    return out;
}

// Least fixpoint of S -> S u { mu(p).mu_p | mu in S, p in supp(mu),
// mu_p in delta_eps(p, eps) }, seeded with delta_eps(q, eps). The accumulated
// iteration has the same union as the level-by-level sequence delta_eps(q,
// eps^n), and it is monotone, so stabilisation is the stopping rule.
// Termination: members take values in the finite set values_of(M) over
// finite Q.
inline DistSet epsilon_closure_state(const Enfa& m, const std::string& q,
                                     std::size_t max_set = kDefaultDistSetLimit) {
    if (!m.has_state(q)) throw ValidationError("unknown state '" + q + "'");
    DistSet closure = eps_one_step(m, q);
    std::vector<FuzzySet> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        std::vector<FuzzySet> added;
        for (const FuzzySet& mu : frontier)
            for (const auto& [p, degree] : mu)
                for (const FuzzySet& mu_p : eps_one_step(m, p)) {
                    FuzzySet next = scale(degree, mu_p);
                    if (closure.insert(next)) {
                        detail::check_set_limit(closure, max_set);
                        added.push_back(std::move(next));
                    }
                }
        frontier = std::move(added);
    }
    return closure;
}

// Per-machine cache of state closures; confine one instance per evaluation.
class ClosureTable {
public:
    explicit ClosureTable(const Enfa& m, std::size_t max_set = kDefaultDistSetLimit)
        : machine_(&m), max_set_(max_set) {
        for (const auto& q : m.states())
            closures_.emplace(q, epsilon_closure_state(m, q, max_set));
    }

    const DistSet& of_state(const std::string& q) const { return closures_.at(q); }

    // Closure of a distribution: {mu} u { mu(q).eta | q in supp(mu),
    // eta in closure(q) }, with Phi excluded.
    DistSet of_dist(const FuzzySet& mu) const {
        DistSet out;
        out.insert(mu);
        for (const auto& [q, degree] : mu)
            for (const FuzzySet& eta : closures_.at(q)) {
                out.insert(scale(degree, eta));
                detail::check_set_limit(out, max_set_);
            }
        return out;
    }

    const Enfa& machine() const noexcept { return *machine_; }

private:
    const Enfa* machine_;
    std::size_t max_set_;
    std::map<std::string, DistSet> closures_;
};

inline DistSet epsilon_closure_dist(const Enfa& m, const FuzzySet& mu,
                                    std::size_t max_set = kDefaultDistSetLimit) {
    DistSet out;
    out.insert(mu);
    for (const auto& [q, degree] : mu) {
        if (!m.has_state(q)) throw ValidationError("unknown state '" + q + "'");
        for (const FuzzySet& eta : epsilon_closure_state(m, q, max_set)) {
            out.insert(scale(degree, eta));
            detail::check_set_limit(out, max_set);
        }
    }
    return out;
}

// One extended step: union of closures of mu(p).mu_p with mu_p drawn from the
// original single-symbol delta.
inline DistSet enfa_step(const ClosureTable& closures, const DistSet& cur,
                         const std::string& a,
                         std::size_t max_set = kDefaultDistSetLimit) {
    const Enfa& m = closures.machine();
    DistSet next;
    for (const FuzzySet& mu : cur)
        for (const auto& [p, degree] : mu)
            for (const FuzzySet& mu_p : m.transition(p, a))
                for (const FuzzySet& closed : closures.of_dist(scale(degree, mu_p))) {
                    next.insert(closed);
                    detail::check_set_limit(next, max_set);
                }
    return next;
}

inline DistSet enfa_extended_delta(const Enfa& m, const std::string& q,
                                   std::span<const std::string> s,
                                   std::size_t max_set = kDefaultDistSetLimit) {
    if (!m.has_state(q)) throw ValidationError("unknown state '" + q + "'");
    detail::check_tokens(m, s);
    const ClosureTable closures(m, max_set);
    DistSet cur = closures.of_state(q);
    for (const auto& a : s) cur = enfa_step(closures, cur, a, max_set);
    return cur;
}

inline Value enfa_language_degree(const Enfa& m, std::span<const std::string> s,
                                  std::size_t max_set = kDefaultDistSetLimit) {
    return degree_of_set(enfa_extended_delta(m, m.initial(), s, max_set),
                         m.final_weights());
}

// ---- Evaluation traces -----------------------------------------------------

// Diagnostic record of an evaluation from the initial state: the reached
// distribution (set) after every prefix, plus the resulting degree.
struct EvalTrace {
    std::vector<std::string> tokens;
    std::variant<std::vector<FuzzySet>, std::vector<DistSet>> prefixes;
    Value degree;
};

inline EvalTrace trace_eval(const Dfa& m, std::span<const std::string> s) {
    detail::check_tokens(m, s);
    std::vector<FuzzySet> prefixes{FuzzySet::singleton(m.initial())};
    for (const auto& a : s) prefixes.push_back(dfa_step(m, prefixes.back(), a));
    EvalTrace trace{{s.begin(), s.end()}, std::move(prefixes), Value::zero()};
    trace.degree = height(intersect(
        std::get<std::vector<FuzzySet>>(trace.prefixes).back(), m.final_weights()));
    return trace;
}

inline EvalTrace trace_eval(const Nfa& m, std::span<const std::string> s,
                            std::size_t max_set = kDefaultDistSetLimit) {
    detail::check_tokens(m, s);
    std::vector<DistSet> prefixes{DistSet::of({FuzzySet::singleton(m.initial())})};
    for (const auto& a : s) prefixes.push_back(nfa_step(m, prefixes.back(), a, max_set));
    EvalTrace trace{{s.begin(), s.end()}, std::move(prefixes), Value::zero()};
    trace.degree = degree_of_set(
        std::get<std::vector<DistSet>>(trace.prefixes).back(), m.final_weights());
    return trace;
}

inline EvalTrace trace_eval(const Enfa& m, std::span<const std::string> s,
                            std::size_t max_set = kDefaultDistSetLimit) {
    detail::check_tokens(m, s);
    const ClosureTable closures(m, max_set);
    std::vector<DistSet> prefixes{closures.of_state(m.initial())};
    for (const auto& a : s)
        prefixes.push_back(enfa_step(closures, prefixes.back(), a, max_set));
    EvalTrace trace{{s.begin(), s.end()}, std::move(prefixes), Value::zero()};
    trace.degree = degree_of_set(
        std::get<std::vector<DistSet>>(trace.prefixes).back(), m.final_weights());
    return trace;
}

inline Value language_degree(const Machine& m, std::span<const std::string> s,
                             std::size_t max_set = kDefaultDistSetLimit) {
    return std::visit([&](const auto& inner) -> Value {
        if constexpr (std::is_same_v<std::decay_t<decltype(inner)>, Dfa>)
            return dfa_language_degree(inner, s);
        else if constexpr (std::is_same_v<std::decay_t<decltype(inner)>, Nfa>)
            return nfa_language_degree(inner, s, max_set);
        else
            return enfa_language_degree(inner, s, max_set);
    }, m);
}

} // namespace fza
