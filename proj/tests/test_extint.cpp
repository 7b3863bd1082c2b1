#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "dimalg/extint.hpp"

using namespace dimalg;

namespace {

std::vector<ExtInt> sample() {
    return {ExtInt::minus_inf(), -2, -1, 0, 1, 2, ExtInt::plus_inf()};
}

} // namespace

TEST_CASE("total order on the sample") {
    auto xs = sample();
    for (ExtInt a : xs)
        for (ExtInt b : xs) {
            // Trichotomy.
            int rels = (a < b) + (b < a) + (a == b);
            CHECK(rels == 1);
            CHECK((a <= b) == !(b < a));
            for (ExtInt c : xs)
                if (a < b && b < c) CHECK(a < c);
        }
    CHECK(ExtInt::minus_inf() < ExtInt(-1000000));
    CHECK(ExtInt(1000000) < ExtInt::plus_inf());
}

TEST_CASE("addition laws, +inf dominant") {
    auto xs = sample();
    for (ExtInt a : xs)
        for (ExtInt b : xs) {
            CHECK(add(a, b) == add(b, a));
            for (ExtInt c : xs) CHECK(add(add(a, b), c) == add(a, add(b, c)));
        }
    for (ExtInt a : xs) CHECK(add(a, ExtInt{0}) == a);
    CHECK(add(ExtInt::plus_inf(), ExtInt::minus_inf()) == ExtInt::plus_inf());
    CHECK(add(ExtInt::minus_inf(), ExtInt::plus_inf()) == ExtInt::plus_inf());
    CHECK(add(ExtInt{3}, ExtInt{4}) == ExtInt{7});
    CHECK(ExtInt{3} + ExtInt{4} == ExtInt{7});
}

TEST_CASE("negation") {
    auto xs = sample();
    for (ExtInt a : xs) CHECK(neg(neg(a)) == a);
    CHECK(neg(ExtInt::plus_inf()) == ExtInt::minus_inf());
    CHECK(neg(ExtInt{5}) == ExtInt{-5});
    // neg distributes over add except exactly on the mixed-infinity pair.
    for (ExtInt a : xs)
        for (ExtInt b : xs) {
            bool mixed = (a.is_plus_inf() && b.is_minus_inf()) ||
                         (a.is_minus_inf() && b.is_plus_inf());
            CHECK((neg(add(a, b)) == add(neg(a), neg(b))) == !mixed);
        }
}

TEST_CASE("min, max, leq") {
    auto xs = sample();
    for (ExtInt a : xs)
        for (ExtInt b : xs) {
            CHECK(min(a, b) == min(b, a));
            CHECK(max(a, b) == max(b, a));
            CHECK(min(a, b) <= a);
            CHECK(a <= max(a, b));
            CHECK(add(min(a, b), max(a, b)) == add(a, b));
            CHECK(leq(a, b) == (a <= b));
        }
    CHECK(min(ExtInt::minus_inf(), ExtInt::plus_inf()) == ExtInt::minus_inf());
}

TEST_CASE("finite access") {
    CHECK(ExtInt{7}.finite() == 7);
    CHECK(ExtInt{7}.is_finite());
    CHECK(!ExtInt::plus_inf().is_finite());
    CHECK_THROWS_AS(ExtInt::plus_inf().finite(), std::logic_error);
    CHECK_THROWS_AS(ExtInt::minus_inf().finite(), std::logic_error);
}

TEST_CASE("text forms") {
    CHECK(to_string(ExtInt{-3}) == "-3");
    CHECK(to_string(ExtInt::plus_inf()) == "inf");
    CHECK(to_string(ExtInt::minus_inf()) == "-inf");
    for (ExtInt a : sample()) CHECK(parse_extint(to_string(a)) == a);
    CHECK(parse_extint("+inf") == ExtInt::plus_inf());
    CHECK(parse_extint("Infinity") == ExtInt::plus_inf());
    CHECK(parse_extint("-INF") == ExtInt::minus_inf());
    CHECK(parse_extint("42") == ExtInt{42});
    CHECK_THROWS_AS(parse_extint("wibble"), std::invalid_argument);
    CHECK_THROWS_AS(parse_extint(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_extint("3.5"), std::invalid_argument);
}

TEST_CASE("hashing respects equality") {
    ExtIntHash h;
    CHECK(h(ExtInt{4}) == h(ExtInt{4}));
    CHECK(h(ExtInt::plus_inf()) == h(ExtInt::plus_inf()));
    CHECK(h(ExtInt::plus_inf()) != h(ExtInt::minus_inf()));
}
