#pragma once

#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fza/machine.hpp"

namespace fza {

namespace detail {

inline std::pair<std::size_t, std::size_t> text_position(std::string_view text,
                                                         std::size_t byte) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

inline std::string strip_json_prefix(const char* what) {
    const std::string_view msg(what);
    const auto pos = msg.find("] ");
    return std::string(pos == std::string_view::npos ? msg : msg.substr(pos + 2));
}

inline const nlohmann::json& require_field(const nlohmann::json& doc, const char* key,
                                           nlohmann::json::value_t type,
                                           const char* type_name) {
    const auto it = doc.find(key);
    if (it == doc.end())
        throw ValidationError("document is missing required field '" + std::string(key) + "'");
    if (it->type() != type)
        throw ValidationError("field '" + std::string(key) + "' must be " + type_name);
    return *it;
}

inline std::vector<std::string> string_list(const nlohmann::json& arr, const char* key) {
    std::vector<std::string> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_string())
            throw ValidationError("field '" + std::string(key) + "' must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

// Value literals travel as strings so exact rationals survive the wire.
inline Value value_literal(const nlohmann::json& j, const std::string& where) {
    if (!j.is_string())
        throw ValidationError("value in " + where +
                              " must be a string literal such as \"0.7\" or \"7/10\"");
    return Value::parse(j.get<std::string>());
}

inline FuzzySet dist_from_json(const nlohmann::json& obj, const std::string& where) {
    if (!obj.is_object())
        throw ValidationError(where + " must be an object mapping states to value literals");
    std::vector<std::pair<std::string, Value>> pairs;
    pairs.reserve(obj.size());
    for (const auto& [state, literal] : obj.items())
        pairs.emplace_back(state, value_literal(literal, where));
    return FuzzySet::from_pairs(pairs);
}

inline nlohmann::ordered_json dist_to_json(const FuzzySet& dist) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [state, value] : dist) obj[state] = value.str();
    return obj;
}

// Transition rows in canonical order: (from, symbol) ascending, then the
// distribution's canonical position within its alternative set.
using TransitionRow = std::tuple<std::string, std::string, const FuzzySet*>;

inline nlohmann::ordered_json rows_to_json(std::vector<TransitionRow> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const TransitionRow& a, const TransitionRow& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) <
               std::tie(std::get<0>(b), std::get<1>(b));
    });
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [from, symbol, dist] : rows) {
        nlohmann::ordered_json record;
        record["from"] = from;
        record["symbol"] = symbol;
        record["dist"] = dist_to_json(*dist);
        arr.push_back(std::move(record));
    }
    return arr;
}

inline nlohmann::ordered_json document_header(std::string_view kind,
                                              const std::vector<std::string>& states,
                                              const std::vector<std::string>& alphabet,
                                              const std::string& initial,
                                              const FuzzySet& final_weights) {
    nlohmann::ordered_json doc;
    doc["format"] = 1;
    doc["kind"] = kind;
    std::vector<std::string> sorted_states = states;
    std::sort(sorted_states.begin(), sorted_states.end());
    doc["states"] = sorted_states;
    std::vector<std::string> sorted_alphabet = alphabet;
    std::sort(sorted_alphabet.begin(), sorted_alphabet.end());
    doc["alphabet"] = sorted_alphabet;
    doc["initial"] = initial;
    doc["final"] = dist_to_json(final_weights);
    return doc;
}

} // namespace detail

inline std::string serialize_automaton(const Dfa& m) {
    auto doc = detail::document_header("dfa", m.states(), m.alphabet(), m.initial(),
                                       m.final_weights());
    std::vector<detail::TransitionRow> rows;
    for (const auto& [key, dist] : m.transitions())
        rows.emplace_back(key.first, key.second, &dist);
    doc["transitions"] = detail::rows_to_json(std::move(rows));
    return doc.dump(2) + "\n";
}

inline std::string serialize_automaton(const Nfa& m) {
    auto doc = detail::document_header("nfa", m.states(), m.alphabet(), m.initial(),
                                       m.final_weights());
    std::vector<detail::TransitionRow> rows;
    for (const auto& [key, dists] : m.transitions())
        for (const FuzzySet& mu : dists) rows.emplace_back(key.first, key.second, &mu);
    doc["transitions"] = detail::rows_to_json(std::move(rows));
    return doc.dump(2) + "\n";
}

inline std::string serialize_automaton(const Enfa& m) {
    auto doc = detail::document_header("enfa", m.states(), m.alphabet(), m.initial(),
                                       m.final_weights());
    std::vector<detail::TransitionRow> rows;
    for (const auto& [key, dists] : m.transitions())
        for (const FuzzySet& mu : dists) rows.emplace_back(key.first, key.second, &mu);
    for (const auto& [from, dists] : m.eps_transitions())
        for (const FuzzySet& mu : dists)
            rows.emplace_back(from, std::string(kEpsilonToken), &mu);
    doc["transitions"] = detail::rows_to_json(std::move(rows));
    return doc.dump(2) + "\n";
}

inline std::string serialize_automaton(const Machine& m) {
    return std::visit([](const auto& inner) { return serialize_automaton(inner); }, m);
}

inline Machine parse_automaton(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = detail::text_position(text, e.byte);
        throw ParseError(line, column, detail::strip_json_prefix(e.what()));
    }
    if (!doc.is_object())
        throw ValidationError("document must be a JSON object");
    for (const auto& [key, ignored] : doc.items()) {
        static constexpr std::string_view known[] = {"format", "kind", "states",
                                                     "alphabet", "initial", "final",
                                                     "transitions"};
        if (std::find(std::begin(known), std::end(known), key) == std::end(known))
            throw ValidationError("unknown field '" + key + "'");
    }

    const auto& format = detail::require_field(doc, "format",
                                               nlohmann::json::value_t::number_unsigned,
                                               "an integer");
    if (format.get<int>() != 1)
        throw ValidationError("unsupported format version " + format.dump());

    const std::string kind =
        detail::require_field(doc, "kind", nlohmann::json::value_t::string, "a string")
            .get<std::string>();
    if (kind != "dfa" && kind != "nfa" && kind != "enfa")
        throw ValidationError("unknown kind '" + kind + "' (expected dfa, nfa, or enfa)");

    auto states = detail::string_list(
        detail::require_field(doc, "states", nlohmann::json::value_t::array, "an array"),
        "states");
    auto alphabet = detail::string_list(
        detail::require_field(doc, "alphabet", nlohmann::json::value_t::array, "an array"),
        "alphabet");
    const std::string initial =
        detail::require_field(doc, "initial", nlohmann::json::value_t::string, "a string")
            .get<std::string>();

    FuzzySet final_weights;
    if (const auto it = doc.find("final"); it != doc.end())
        final_weights = detail::dist_from_json(*it, "the final set");

    struct Record {
        std::string from;
        std::string symbol;
        FuzzySet dist;
    };
    std::vector<Record> records;
    if (const auto it = doc.find("transitions"); it != doc.end()) {
        if (!it->is_array())
            throw ValidationError("field 'transitions' must be an array");
        for (const auto& rec : *it) {
            if (!rec.is_object())
                throw ValidationError("each transition must be an object");
            const std::string from =
                detail::require_field(rec, "from", nlohmann::json::value_t::string,
                                      "a string").get<std::string>();
            const std::string symbol =
                detail::require_field(rec, "symbol", nlohmann::json::value_t::string,
                                      "a string").get<std::string>();
            FuzzySet dist = detail::dist_from_json(
                detail::require_field(rec, "dist", nlohmann::json::value_t::object,
                                      "an object"),
                "transition (" + from + ", " + symbol + ")");
            records.push_back({from, symbol, std::move(dist)});
        }
    }

    if (kind == "dfa") {
        Dfa::Delta delta;
        for (auto& rec : records) {
            if (rec.symbol == kEpsilonToken)
                throw ValidationError("'eps' transition in a dfa document");
            if (!delta.emplace(std::make_pair(rec.from, rec.symbol),
                               std::move(rec.dist)).second)
                throw ValidationError("duplicate transition record for (" + rec.from +
                                      ", " + rec.symbol + ") in a dfa document");
        }
        return Dfa(std::move(states), std::move(alphabet), initial,
                   std::move(final_weights), std::move(delta));
    }
    if (kind == "nfa") {
        Nfa::Delta delta;
        for (auto& rec : records) {
            if (rec.symbol == kEpsilonToken)
                throw ValidationError("'eps' transition in an nfa document");
            delta[{rec.from, rec.symbol}].insert(std::move(rec.dist));
        }
        return Nfa(std::move(states), std::move(alphabet), initial,
                   std::move(final_weights), std::move(delta));
    }
    Enfa::Delta delta;
    Enfa::EpsDelta eps;
    for (auto& rec : records) {
        if (rec.symbol == kEpsilonToken)
            eps[rec.from].insert(std::move(rec.dist));
        else
            delta[{rec.from, rec.symbol}].insert(std::move(rec.dist));
    }
    return Enfa(std::move(states), std::move(alphabet), initial,
                std::move(final_weights), std::move(delta), std::move(eps));
}

} // namespace fza
