#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "fza/semantics.hpp"

namespace fza {

inline constexpr std::uint64_t kDefaultRunLimit = 10'000'000;
inline constexpr std::size_t kDefaultStringLimit = 1'000'000;

// Result of bounded-length language comparison. The counterexample, when
// present, is the length-lexicographically least differing string.
struct Verdict {
    struct Counterexample {
        std::vector<std::string> tokens;
        Value left;
        Value right;
    };

    int max_len = 0;
    std::optional<Counterexample> counterexample;

    bool equivalent() const noexcept { return !counterexample.has_value(); }
};

namespace detail {

struct RunBudget {
    std::uint64_t remaining;
    void spend() {
        if (remaining == 0)
            throw ResourceLimitError("run enumeration limit exceeded");
        --remaining;
    }
};

// Path semantics, kept independent of the recursive extended-delta code: a
// run picks one alternative distribution per input symbol and one target
// state inside it, and scores min over the picked memberships and the final
// weight of the last state.
struct NfaRunSearch {
    const Nfa& machine;
    std::span<const std::string> tokens;
    RunBudget budget;
    Value best = Value::zero();

    void explore(const std::string& state, std::size_t consumed, Value acc) {
        budget.spend();
        if (consumed == tokens.size()) {
            best = max(best, min(acc, machine.final_weights().at(state)));
            return;
        }
        for (const FuzzySet& mu : machine.transition(state, tokens[consumed]))
            for (const auto& [target, degree] : mu)
                explore(target, consumed + 1, min(acc, degree));
    }
};

// Same idea with silent moves allowed before, between, and after symbols.
// Each contiguous chain of silent moves visits pairwise-distinct states: the
// running min never increases, so looping back cannot improve any
// continuation.
struct EnfaRunSearch {
    const Enfa& machine;
    std::span<const std::string> tokens;
    RunBudget budget;
    Value best = Value::zero();

    void explore(const std::string& state, std::size_t consumed, Value acc,
                 std::set<std::string> chain) {
        budget.spend();
        if (consumed == tokens.size())
            best = max(best, min(acc, machine.final_weights().at(state)));
        if (consumed < tokens.size())
            for (const FuzzySet& mu : machine.transition(state, tokens[consumed]))
                for (const auto& [target, degree] : mu)
                    explore(target, consumed + 1, min(acc, degree), {target});
        for (const FuzzySet& mu : machine.eps_transition(state))
            for (const auto& [target, degree] : mu)
                if (!chain.contains(target)) {
                    auto extended = chain;
                    extended.insert(target);
                    explore(target, consumed, min(acc, degree), std::move(extended));
                }
    }
};

// Visits every string over `symbols` of length <= max_len in
// length-lexicographic order; the visitor returns false to stop early.
template <typename Visitor>
void for_each_string(const std::vector<std::string>& symbols, int max_len,
                     Visitor&& visit) {
    std::vector<std::string> current;
    if (!visit(current)) return;
    for (int len = 1; len <= max_len; ++len) {
        if (symbols.empty()) return;
        std::vector<std::size_t> odometer(static_cast<std::size_t>(len), 0);
        while (true) {
            current.clear();
            for (const std::size_t i : odometer) current.push_back(symbols[i]);
            if (!visit(current)) return;
            std::size_t pos = odometer.size();
            while (pos > 0 && odometer[pos - 1] + 1 == symbols.size())
                odometer[--pos] = 0;
            if (pos == 0) break;
            ++odometer[pos - 1];
        }
    }
}

inline std::vector<std::string> sorted_alphabet(const Machine& m) {
    std::vector<std::string> symbols = alphabet_of(m);
    std::sort(symbols.begin(), symbols.end());
    return symbols;
}

} // namespace detail

inline Value nfa_run_degree_oracle(const Nfa& m, std::span<const std::string> s,
                                   std::uint64_t max_runs = kDefaultRunLimit) {
    detail::check_tokens(m, s);
    detail::NfaRunSearch search{m, s, {max_runs}};
    search.explore(m.initial(), 0, Value::one());
    return search.best;
}

inline Value enfa_run_degree_oracle(const Enfa& m, std::span<const std::string> s,
                                    std::uint64_t max_runs = kDefaultRunLimit) {
    detail::check_tokens(m, s);
    detail::EnfaRunSearch search{m, s, {max_runs}};
    search.explore(m.initial(), 0, Value::one(), {m.initial()});
    return search.best;
}

// Tabulates the language over all strings of length <= max_len in
// length-lexicographic order (zeros included).
inline std::vector<std::pair<std::vector<std::string>, Value>>
enumerate_language(const Machine& m, int max_len,
                   std::size_t max_strings = kDefaultStringLimit,
                   std::size_t max_set = kDefaultDistSetLimit) {
    if (max_len < 0) throw ValidationError("max_len must be non-negative");
    const std::vector<std::string> symbols = detail::sorted_alphabet(m);

    std::size_t total = 1, layer = 1;
    for (int len = 1; len <= max_len; ++len) {
        if (layer > max_strings / std::max<std::size_t>(symbols.size(), 1)) {
            total = max_strings + 1;
            break;
        }
        layer *= symbols.size();
        total += layer;
    }
    if (total > max_strings)
        throw ResourceLimitError("language table exceeds limit of " +
                                 std::to_string(max_strings) + " strings");

    std::vector<std::pair<std::vector<std::string>, Value>> rows;
    rows.reserve(total);
    detail::for_each_string(symbols, max_len, [&](const std::vector<std::string>& s) {
        rows.emplace_back(s, language_degree(m, s, max_set));
        return true;
    });
    return rows;
}

// Compares language degrees on every string of length <= max_len and reports
// the least differing string, if any. The machines must agree on the
// alphabet as a set.
inline Verdict equiv_up_to(const Machine& a, const Machine& b, int max_len,
                           std::size_t max_set = kDefaultDistSetLimit) {
    if (max_len < 0) throw ValidationError("max_len must be non-negative");
    const std::vector<std::string> symbols = detail::sorted_alphabet(a);
    if (symbols != detail::sorted_alphabet(b))
        throw ValidationError("alphabet mismatch between the two machines");

    Verdict verdict{max_len, std::nullopt};
    detail::for_each_string(symbols, max_len, [&](const std::vector<std::string>& s) {
        const Value left = language_degree(a, s, max_set);
        const Value right = language_degree(b, s, max_set);
        if (left == right) return true;
        verdict.counterexample = Verdict::Counterexample{s, left, right};
        return false;
    });
    return verdict;
}

} // namespace fza
