#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dimalg/corpus.hpp"
#include "dimalg/graded.hpp"

using namespace dimalg;

namespace {

GradedGroup parse_one(std::int64_t deg, const char* lit) {
    return single(deg, parse_group(lit));
}

} // namespace

TEST_CASE("construction normalizes") {
    GradedGroup zero;
    CHECK(zero.is_zero());
    CHECK(zero.at(3).is_zero());
    CHECK(single(2, FiniteSumGroup{}).is_zero());
    GradedGroup g(std::map<std::int64_t, FiniteSumGroup>{{0, parse_group("Z")},
                                                        {4, FiniteSumGroup{}}});
    CHECK(g.terms().size() == 1);
    CHECK(to_string(g) == "S^0(Z)");
    CHECK(to_string(zero) == "0");
}

TEST_CASE("direct sum merges degreewise") {
    GradedGroup a = direct_sum(parse_one(0, "Z/2"), parse_one(2, "Q"));
    GradedGroup b = parse_one(0, "Z/3");
    CHECK(to_string(direct_sum(a, b)) == "S^0(Z/2 + Z/3) + S^2(Q)");
    CHECK(direct_sum(a, GradedGroup{}) == a);
}

TEST_CASE("smash worked examples") {
    // Tensor lands in the degree sum; torsion product one degree higher.
    GradedGroup s = smash(parse_one(2, "Z/3"), parse_one(3, "Z/3"));
    CHECK(to_string(s) == "S^5(Z/3) + S^6(Z/3)");
    CHECK(cin(s) == ExtInt{5});

    CHECK(smash(parse_one(0, "Z"), parse_one(0, "Z")) == parse_one(0, "Z"));
    CHECK(smash(parse_one(0, "Q"), parse_one(1, "Z/2")).is_zero());
    CHECK(smash(GradedGroup{}, parse_one(0, "Z")).is_zero());

    // Strict witness for the smash valuation bound: both factors sit in
    // degree 0 but the smash vanishes outright.
    GradedGroup strict = smash(parse_one(0, "Z/2"), parse_one(0, "Z/3"));
    CHECK(strict.is_zero());
    CHECK(cin(strict) == ExtInt::plus_inf());
    CHECK(add(cin(parse_one(0, "Z/2")), cin(parse_one(0, "Z/3"))) == ExtInt{0});
}

TEST_CASE("suspension") {
    GradedGroup a = direct_sum(parse_one(0, "Z/2"), parse_one(2, "Q"));
    CHECK(to_string(suspend(a, ExtInt{3})) == "S^3(Z/2) + S^5(Q)");
    CHECK(suspend(a, ExtInt{0}) == a);
    CHECK(suspend(suspend(a, ExtInt{4}), ExtInt{-4}) == a);
    CHECK(suspend(a, ExtInt::plus_inf()).is_zero());
    CHECK_THROWS_AS(suspend(a, ExtInt::minus_inf()), DomainError);
    CHECK_THROWS_AS(suspend(GradedGroup{}, ExtInt::minus_inf()), DomainError);
}

TEST_CASE("connectivity index") {
    CHECK(cin(GradedGroup{}) == ExtInt::plus_inf());
    CHECK(cin(parse_one(-3, "Z")) == ExtInt{-3});
    CHECK(cin(direct_sum(parse_one(-1, "Q"), parse_one(5, "Z/2"))) == ExtInt{-1});
}

TEST_CASE("coefficient dimension worked examples") {
    CHECK(dim_coeff(parse_one(0, "Z"), parse_group("Z/5")) == ExtInt{0});
    CHECK(dim_coeff(parse_one(0, "Z/2^inf"), parse_group("Z/2")) == ExtInt{1});
    CHECK(dim_coeff(parse_one(0, "Z/2"), parse_group("Q")) == ExtInt::plus_inf());
    CHECK(dim_coeff(parse_one(4, "Q"), parse_group("Q")) == ExtInt{4});
    CHECK(dim_coeff(parse_one(0, "Z"), FiniteSumGroup{}) == ExtInt::plus_inf());
    CHECK(dim_coeff(GradedGroup{}, parse_group("Z")) == ExtInt::plus_inf());
}

TEST_CASE("valuation laws on random pairs") {
    Corpus corpus(2026);
    auto groups = universe_groups();
    for (int i = 0; i < 400; ++i) {
        GradedGroup a = corpus.graded();
        GradedGroup b = corpus.graded();
        CHECK(cin(direct_sum(a, b)) == min(cin(a), cin(b)));
        CHECK(cin(smash(a, b)) >= add(cin(a), cin(b)));
        const FiniteSumGroup& g = groups[corpus.pick(groups.size())];
        std::int64_t k = corpus.pick_in(-3, 3);
        CHECK(dim_coeff(suspend(a, ExtInt{k}), g) == add(ExtInt{k}, dim_coeff(a, g)));
        CHECK(dim_coeff(direct_sum(a, b), g) == min(dim_coeff(a, g), dim_coeff(b, g)));
    }
}

TEST_CASE("smash is symmetric and additive in degree") {
    Corpus corpus(99);
    for (int i = 0; i < 120; ++i) {
        GradedGroup a = corpus.graded();
        GradedGroup b = corpus.graded();
        CHECK(smash(a, b) == smash(b, a));
        CHECK(smash(suspend(a, ExtInt{2}), b) == suspend(smash(a, b), ExtInt{2}));
    }
}
