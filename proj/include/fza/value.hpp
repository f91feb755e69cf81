#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "fza/errors.hpp"

namespace fza {

// Exact rational membership degree in [0, 1], kept in lowest terms.
//
// Degrees are only ever combined with min and max, so every value that can
// appear at runtime is one of the parsed inputs (or 0/1). Denominators are
// capped at 10^9 so that ordering via cross-multiplication stays within
// int64 range.
class Value {
public:
    static constexpr std::int64_t kMaxDenominator = 1'000'000'000;

    constexpr Value() = default; // zero

    Value(std::int64_t numerator, std::int64_t denominator) {
        if (denominator <= 0)
            throw ValidationError("value denominator must be positive");
        if (numerator < 0 || numerator > denominator)
            throw ValidationError("value " + std::to_string(numerator) + "/" +
                                  std::to_string(denominator) + " outside [0,1]");
        const std::int64_t g = std::gcd(numerator, denominator);
        num_ = numerator / g;
        den_ = denominator / g;
        if (den_ > kMaxDenominator)
            throw ValidationError("value denominator exceeds supported precision");
    }

    static Value zero() { return Value(); }
    static Value one() { return Value(1, 1); }

    // Accepts "0", "1", "0.25", "7/10". No sign, no exponent, no whitespace.
    static Value parse(std::string_view text) {
        const auto bad = [&] {
            return ValidationError("invalid value literal '" + std::string(text) + "'");
        };
        if (text.empty()) throw bad();

        const auto slash = text.find('/');
        if (slash != std::string_view::npos) {
            const std::int64_t n = parse_digits(text.substr(0, slash), bad);
            const std::int64_t d = parse_digits(text.substr(slash + 1), bad);
            if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
            return Value(n, d);
        }

        const auto dot = text.find('.');
        if (dot == std::string_view::npos)
            return Value(parse_digits(text, bad), 1);

        const std::string_view int_part = text.substr(0, dot);
        const std::string_view frac_part = text.substr(dot + 1);
        if (frac_part.empty()) throw bad();
        const std::int64_t whole = parse_digits(int_part, bad);
        if (whole > 1)
            throw ValidationError("value '" + std::string(text) + "' outside [0,1]");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) {
            if (den > 100'000'000'000'000'000)
                throw ValidationError("too many fraction digits in '" + std::string(text) + "'");
            den *= 10;
        }
        const std::int64_t frac = parse_digits(frac_part, bad);
        return Value(whole * den + frac, den);
    }

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }
    bool is_one() const noexcept { return num_ == den_; }

    // Canonical literal: terminating decimal when the denominator divides a
    // power of ten, "num/den" otherwise.
    std::string str() const {
        if (num_ == 0) return "0";
        if (num_ == den_) return "1";
        std::int64_t rest = den_;
        while (rest % 2 == 0) rest /= 2;
        while (rest % 5 == 0) rest /= 5;
        if (rest != 1)
            return std::to_string(num_) + "/" + std::to_string(den_);
        std::string out = "0.";
        std::int64_t r = num_;
        while (r != 0) {
            r *= 10;
            out += static_cast<char>('0' + r / den_);
            r %= den_;
        }
        return out;
    }

    bool operator==(const Value&) const = default; // lowest terms are unique

    std::strong_ordering operator<=>(const Value& other) const noexcept {
        return num_ * other.den_ <=> other.num_ * den_;
    }

private:
    template <typename Err>
    static std::int64_t parse_digits(std::string_view digits, const Err& bad) {
        if (digits.empty() || digits.size() > 18) throw bad();
        std::int64_t out = 0;
        for (const char c : digits) {
            if (c < '0' || c > '9') throw bad();
            out = out * 10 + (c - '0');
        }
        return out;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Value min(Value a, Value b) { return a < b ? a : b; }
inline Value max(Value a, Value b) { return a < b ? b : a; }

} // namespace fza
