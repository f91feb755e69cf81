#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "fza/fuzzy_set.hpp"

using fza::FuzzySet;
using fza::Value;

namespace {

FuzzySet fs(std::vector<std::pair<std::string, Value>> pairs) {
    return FuzzySet::from_pairs(pairs);
}

Value v(int tenths) { return Value(tenths, 10); }

FuzzySet random_set(std::mt19937& rng) {
    static const std::vector<std::string> universe{"q0", "q1", "q2", "q3", "q4"};
    std::vector<std::pair<std::string, Value>> pairs;
    for (const auto& x : universe) {
        const int tenths = std::uniform_int_distribution<int>(0, 10)(rng);
        if (tenths > 0) pairs.emplace_back(x, v(tenths));
    }
    return fs(pairs);
}

} // namespace

TEST_CASE("from_pairs builds sparse sets") {
    const FuzzySet f = fs({{"q2", v(5)}, {"q4", v(9)}});
    CHECK(f.size() == 2);
    CHECK(f.at("q2") == v(5));
    CHECK(f.at("q4") == v(9));
    CHECK(f.at("q0") == Value::zero());

    CHECK(fs({{"x", Value::zero()}}).empty());
    CHECK_THROWS_AS(fs({{"x", v(3)}, {"x", v(3)}}), fza::ValidationError);
    CHECK_THROWS_AS(fs({{"", v(3)}}), fza::ValidationError);
    CHECK_THROWS_AS(fs({{"a b", v(3)}}), fza::ValidationError);
}

TEST_CASE("height") {
    CHECK(height(fs({{"q2", v(5)}, {"q4", v(9)}})) == v(9));
    CHECK(height(FuzzySet()) == Value::zero());
    // the aa step of the running example: height({0.2/q4} /\ F) = 0.2
    const FuzzySet f = fs({{"q2", v(5)}, {"q4", v(9)}});
    CHECK(height(intersect(fs({{"q4", v(2)}}), f)) == v(2));
}

TEST_CASE("union is pointwise max") {
    const FuzzySet a = fs({{"q1", v(9)}, {"q2", v(2)}});
    const FuzzySet b = fs({{"q2", v(2)}, {"q3", v(9)}});
    CHECK(union_of(a, b) == fs({{"q1", v(9)}, {"q2", v(2)}, {"q3", v(9)}}));
    CHECK(union_of(a, FuzzySet()) == a);
    CHECK(union_of(a, a) == a);
}

TEST_CASE("intersection is pointwise min") {
    const FuzzySet a = fs({{"q1", v(9)}, {"q2", v(2)}});
    const FuzzySet b = fs({{"q2", v(5)}, {"q4", v(9)}});
    CHECK(intersect(a, b) == fs({{"q2", v(2)}}));
    CHECK(intersect(a, FuzzySet()).empty());
    CHECK(intersect(a, a) == a);
}

TEST_CASE("scale product") {
    CHECK(scale(v(2), fs({{"q4", v(5)}})) == fs({{"q4", v(2)}}));
    const FuzzySet a = fs({{"q1", v(9)}, {"q2", v(2)}});
    CHECK(scale(Value::one(), a) == a);
    CHECK(scale(Value::zero(), a).empty());
}

TEST_CASE("subset order") {
    const FuzzySet a = fs({{"q1", v(1)}});
    const FuzzySet b = fs({{"q1", v(1)}, {"q4", v(7)}});
    CHECK(is_subset(FuzzySet(), a));
    CHECK(is_subset(a, b));
    CHECK_FALSE(is_subset(b, a));
    CHECK_FALSE(is_subset(fs({{"q1", v(9)}}), fs({{"q2", v(2)}})));
}

TEST_CASE("algebraic laws on random sets") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 500; ++trial) {
        const FuzzySet a = random_set(rng);
        const FuzzySet b = random_set(rng);
        const FuzzySet c = random_set(rng);
        const Value lambda = Value(std::uniform_int_distribution<int>(0, 10)(rng), 10);

        CHECK(height(union_of(a, b)) == max(height(a), height(b)));
        CHECK(height(intersect(a, b)) <= min(height(a), height(b)));

        CHECK(is_subset(scale(lambda, a), a));
        for (const auto& [x, degree] : scale(lambda, a))
            CHECK(!a.at(x).is_zero()); // supp(lambda . a) inside supp(a)

        CHECK(union_of(a, b) == union_of(b, a));
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(union_of(union_of(a, b), c) == union_of(a, union_of(b, c)));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(union_of(a, a) == a);
        CHECK(intersect(a, a) == a);
        CHECK(scale(lambda, union_of(a, b)) ==
              union_of(scale(lambda, a), scale(lambda, b)));

        // equality is mutual containment
        CHECK((a == b) == (is_subset(a, b) && is_subset(b, a)));

        // min/max never leave the input values (plus 0)
        for (const FuzzySet& result :
             {union_of(a, b), intersect(a, b), scale(lambda, a)})
            for (const auto& [x, degree] : result)
                CHECK((degree == a.at(x) || degree == b.at(x) || degree == lambda));
    }
}
