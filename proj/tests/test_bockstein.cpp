#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "dimalg/bockstein.hpp"
#include "dimalg/corpus.hpp"

using namespace dimalg;

namespace {

BocksteinFunction make(ExtInt q, ExtInt l, ExtInt m, ExtInt u,
                       std::map<std::int64_t, PrimeTriple> exc = {}) {
    PrimePattern p;
    p.q = q;
    p.def = PrimeTriple{l, m, u};
    p.exc = std::move(exc);
    return BocksteinFunction::from_pattern(std::move(p));
}

BocksteinFunction constant(ExtInt c) { return make(c, c, c, c); }

// Every exception-free pattern over a small value set that satisfies the
// axioms. One prime slot suffices: every per-slot clause sees only that slot.
const std::vector<BocksteinFunction>& valid_universe() {
    static const std::vector<BocksteinFunction> vs = [] {
        std::vector<ExtInt> span{ExtInt::minus_inf(), -2, -1, 0, 1, 2,
                                 ExtInt::plus_inf()};
        std::vector<BocksteinFunction> out;
        for (ExtInt q : span)
            for (ExtInt l : span)
                for (ExtInt m : span)
                    for (ExtInt u : span) {
                        PrimePattern p;
                        p.q = q;
                        p.def = PrimeTriple{l, m, u};
                        if (check_axioms(p).empty())
                            out.push_back(BocksteinFunction::from_pattern(std::move(p)));
                    }
        return out;
    }();
    return vs;
}

bool violates_exactly(const PrimePattern& p, int axiom) {
    auto vs = check_axioms(p);
    return vs.size() == 1 && vs[0].axiom == axiom && !vs[0].prime.has_value();
}

PrimePattern raw(ExtInt q, ExtInt l, ExtInt m, ExtInt u) {
    PrimePattern p;
    p.q = q;
    p.def = PrimeTriple{l, m, u};
    return p;
}

} // namespace

TEST_CASE("each axiom has a pattern violating only it") {
    ExtInt inf = ExtInt::plus_inf();
    CHECK(violates_exactly(raw(2, 2, 0, 1), 1));
    CHECK(violates_exactly(raw(2, 2, 2, 0), 2));
    CHECK(violates_exactly(raw(1, 0, 0, 0), 3));
    CHECK(violates_exactly(raw(0, 0, 1, 0), 4));
    CHECK(violates_exactly(raw(0, 1, 1, 1), 5));
    CHECK(violates_exactly(raw(0, 2, 1, 0), 6));
    CHECK(check_axioms(raw(0, 0, 0, 0)).empty());
    CHECK(check_axioms(raw(1, inf, inf, inf)).empty());
    CHECK(check_axioms(raw(ExtInt::minus_inf(), ExtInt::minus_inf(),
                           ExtInt::minus_inf(), ExtInt::minus_inf()))
              .empty());
}

TEST_CASE("validation reports every failing slot") {
    PrimePattern p = raw(0, 0, 0, 0);
    p.exc[2] = PrimeTriple{2, 2, 0}; // axiom 2 with q=0: also 3,4 hold? l=2,m=2,u=0
    p.exc[3] = PrimeTriple{0, 1, 0}; // axiom 4
    try {
        BocksteinFunction::from_pattern(p);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        bool at2 = false, at3 = false;
        for (const auto& v : e.violations) {
            if (v.prime == std::optional<std::int64_t>{2} && v.axiom == 2) at2 = true;
            if (v.prime == std::optional<std::int64_t>{3} && v.axiom == 4) at3 = true;
        }
        CHECK(at2);
        CHECK(at3);
        CHECK(std::string(e.what()).find("p=2") != std::string::npos);
    }
    PrimePattern bad_key = raw(0, 0, 0, 0);
    bad_key.exc[4] = PrimeTriple{1, 1, 1};
    auto vs = check_axioms(bad_key);
    REQUIRE(!vs.empty());
    CHECK(vs[0].axiom == 0);
    CHECK_THROWS_AS(BocksteinFunction::from_pattern(bad_key), ValidationError);
}

TEST_CASE("normalization drops redundant exceptions") {
    PrimePattern p = raw(0, 0, 0, 0);
    p.exc[3] = PrimeTriple{0, 0, 0};
    p.exc[5] = PrimeTriple{1, 1, 0};
    BocksteinFunction f = BocksteinFunction::from_pattern(p);
    CHECK(f.exceptions().size() == 1);
    CHECK(f.exceptions().count(5) == 1);
    CHECK(f.triple_at(3) == f.default_triple());
    CHECK(f.pattern().exception_primes() == std::vector<std::int64_t>{5});
}

TEST_CASE("evaluation addresses coordinates by family") {
    BocksteinFunction f = make(1, 1, 1, 1, {{3, PrimeTriple{3, 3, 2}}});
    CHECK(f.evaluate({BFamily::Q, 0}) == ExtInt{1});
    CHECK(f.evaluate({BFamily::Localized, 3}) == ExtInt{3});
    CHECK(f.evaluate({BFamily::Cyclic, 3}) == ExtInt{3});
    CHECK(f.evaluate({BFamily::Prufer, 3}) == ExtInt{2});
    CHECK(f.evaluate({BFamily::Localized, 7}) == ExtInt{1});
    CHECK(merged_primes(f.pattern(), constant(0).pattern()) ==
          std::vector<std::int64_t>{3});
}

TEST_CASE("regular and constant slot predicates") {
    CHECK(is_p_regular(constant(2), std::nullopt));
    CHECK(is_p_constant(constant(2), std::nullopt));
    BocksteinFunction t4 = make(1, ExtInt::plus_inf(), ExtInt::plus_inf(),
                                ExtInt::plus_inf());
    CHECK(is_p_regular(t4, std::nullopt));
    CHECK(!is_p_constant(t4, std::nullopt));
    BocksteinFunction singular = make(0, 1, 1, 0);
    CHECK(!is_p_regular(singular, std::nullopt));
    CHECK(!is_p_constant(singular, std::nullopt));
    BocksteinFunction top = constant(ExtInt::plus_inf());
    CHECK(is_p_constant(top, std::nullopt));
}

TEST_CASE("smash worked examples") {
    // Constants add.
    CHECK(smash(constant(1), constant(2)) == constant(3));
    // The zero function is the unit.
    BocksteinFunction s = make(0, 1, 1, 0);
    CHECK(smash(s, BocksteinFunction::zero()) == s);
    // Both factors singular: the tightened clauses engage.
    BocksteinFunction ss = smash(s, s);
    CHECK(ss.q() == ExtInt{0});
    CHECK(ss.default_triple() == PrimeTriple{2, 2, 1});
    // Mixed regular/singular at a prime: plain pointwise sum.
    BocksteinFunction r = smash(s, constant(1));
    CHECK(r.q() == ExtInt{1});
    CHECK(r.default_triple() == PrimeTriple{2, 2, 1});
}

TEST_CASE("dual worked examples") {
    CHECK(dual(constant(3)) == constant(-3));
    CHECK(dual(BocksteinFunction::zero()) == BocksteinFunction::zero());

    BocksteinFunction s = make(0, 1, 1, 0);
    BocksteinFunction ds = dual(s);
    CHECK(ds.q() == ExtInt{0});
    CHECK(ds.default_triple() == PrimeTriple{0, -1, -1});
    CHECK(dual(ds) == s);

    // A finite rational value under an all-infinite triple: the singular
    // clauses keep the dual inside the axioms.
    BocksteinFunction t4 = make(1, ExtInt::plus_inf(), ExtInt::plus_inf(),
                                ExtInt::plus_inf());
    BocksteinFunction dt4 = dual(t4);
    CHECK(dt4.q() == ExtInt{-1});
    CHECK(dt4.default_triple() ==
          PrimeTriple{-1, ExtInt::minus_inf(), ExtInt::minus_inf()});
    CHECK(dual(dt4) == t4);
}

TEST_CASE("sum-product worked examples") {
    CHECK(sum_product(constant(1), constant(2)) == constant(3));
    // -inf dominates the sums on the d side.
    BocksteinFunction bot = constant(ExtInt::minus_inf());
    CHECK(sum_product(bot, constant(ExtInt::plus_inf())) == bot);
    CHECK(duality_identity_check(bot, constant(ExtInt::plus_inf())));
}

TEST_CASE("exhaustive single-slot laws") {
    const auto& vs = valid_universe();
    // The axiom filter retains exactly 76 of the 7^4 grid points; a change
    // here means the axiom set itself changed.
    CHECK(vs.size() == 76);

    for (const auto& a : vs) {
        CHECK(dual(dual(a)) == a);
        CHECK(smash(a, BocksteinFunction::zero()) == a);
        CHECK(leq(a, a));
    }

    for (const auto& a : vs)
        for (const auto& b : vs) {
            // Closure: every operation yields a validated function (the
            // constructors throw otherwise) and stays commutative.
            BocksteinFunction sab = smash(a, b);
            CHECK(sab == smash(b, a));
            BocksteinFunction pab = sum_product(a, b);
            CHECK(pab == sum_product(b, a));
            CHECK(duality_identity_check(a, b));
            BocksteinFunction lo = lattice_min(a, b);
            BocksteinFunction hi = lattice_max(a, b);
            CHECK(leq(lo, a));
            CHECK(leq(a, hi));
            CHECK(leq(a, b) == leq(dual(b), dual(a)));
            CHECK(leq(a, b) == (lo == a));
        }
}

TEST_CASE("lattice absorption and order") {
    const auto& vs = valid_universe();
    for (std::size_t i = 0; i < vs.size(); i += 7)
        for (std::size_t j = 0; j < vs.size(); j += 11) {
            const auto& a = vs[i];
            const auto& b = vs[j];
            CHECK(lattice_min(a, lattice_max(a, b)) == a);
            CHECK(lattice_max(a, lattice_min(a, b)) == a);
        }
}

TEST_CASE("shift") {
    BocksteinFunction f = make(1, 1, 1, 1, {{3, PrimeTriple{3, 3, 2}}});
    BocksteinFunction g = shift(f, 2);
    CHECK(g.q() == ExtInt{3});
    CHECK(g.triple_at(3) == PrimeTriple{5, 5, 4});
    CHECK(shift(g, -2) == f);
    BocksteinFunction top = constant(ExtInt::plus_inf());
    CHECK(shift(top, 5) == top);
    for (std::size_t i = 0; i < valid_universe().size(); i += 5) {
        const auto& a = valid_universe()[i];
        CHECK(shift(shift(a, 3), -3) == a);
        CHECK(smash(shift(a, 1), constant(0)) == shift(a, 1));
    }
}

TEST_CASE("shift distributes over smash") {
    const auto& vs = valid_universe();
    for (std::size_t i = 0; i < vs.size(); i += 9)
        for (std::size_t j = 0; j < vs.size(); j += 13) {
            CHECK(smash(shift(vs[i], 1), vs[j]) == shift(smash(vs[i], vs[j]), 1));
            CHECK(sum_product(shift(vs[i], 1), vs[j]) ==
                  shift(sum_product(vs[i], vs[j]), 1));
        }
}

TEST_CASE("degreewise-dimension conversion") {
    DPattern d = gg_d_function(constant(2));
    CHECK(d.pat.q == ExtInt{2});
    CHECK(d.pat.def == PrimeTriple{2, 2, 2});

    // d(Z_(p)) = min(q, u) and d(Z/p^inf) = min(l, u + 1), uniformly.
    BocksteinFunction s = make(0, 1, 1, 0);
    DPattern dsing = gg_d_function(s);
    CHECK(dsing.pat.q == ExtInt{0});
    CHECK(dsing.pat.def == PrimeTriple{0, 1, 1});

    BocksteinFunction t4 = make(1, ExtInt::plus_inf(), ExtInt::plus_inf(),
                                ExtInt::plus_inf());
    DPattern dt4 = gg_d_function(t4);
    CHECK(dt4.pat.q == ExtInt{1});
    CHECK(dt4.pat.def ==
          PrimeTriple{1, ExtInt::plus_inf(), ExtInt::plus_inf()});
}

TEST_CASE("pattern realization") {
    BocksteinFunction f = make(1, 1, 1, 1, {{3, PrimeTriple{3, 3, 2}}});
    GradedGroup g = gg_restrict(f, {2, 3});
    CHECK(to_string(g) ==
          "S^1(Q + Z/2 + Z/2^inf + Z_(2)) + S^2(Z/3^inf) + S^3(Z/3 + Z_(3))");

    // +inf coordinates contribute nothing.
    BocksteinFunction t7 =
        make(ExtInt::plus_inf(), ExtInt::plus_inf(), ExtInt::plus_inf(),
             ExtInt::plus_inf(), {{2, PrimeTriple{ExtInt::plus_inf(), 1, 0}}});
    CHECK(to_string(gg_restrict(t7, {2, 3})) == "S^0(Z/2^inf) + S^1(Z/2)");

    // -inf coordinates are unrealizable.
    BocksteinFunction bot = constant(ExtInt::minus_inf());
    CHECK_THROWS_AS(gg_restrict(bot, {2}), DomainError);
    CHECK_THROWS_AS(gg_restrict(f, {4}), DomainError);

    // Duplicate primes collapse.
    CHECK(gg_restrict(f, {3, 3, 2}) == g);
}

TEST_CASE("every mutation flag changes its operation") {
    const auto& vs = valid_universe();
    auto smash_differs = [&](const MutationFlags& flags) {
        for (std::size_t i = 0; i < vs.size(); i += 3)
            for (std::size_t j = 0; j < vs.size(); j += 3) {
                try {
                    if (smash_with(vs[i], vs[j], flags) != smash(vs[i], vs[j]))
                        return true;
                } catch (const InternalError&) {
                    return true; // mutant produced an invalid pattern
                }
            }
        return false;
    };
    auto dual_differs = [&](const MutationFlags& flags) {
        for (const auto& a : vs) {
            try {
                if (dual_with(a, flags) != dual(a)) return true;
            } catch (const InternalError&) {
                return true;
            }
        }
        return false;
    };
    auto dconv_differs = [&](const MutationFlags& flags) {
        for (const auto& a : vs)
            if (gg_d_function_with(a, flags) != gg_d_function(a)) return true;
        return false;
    };

    MutationFlags f1;
    f1.smash_pru_drop_shift = true;
    CHECK(smash_differs(f1));
    MutationFlags f2;
    f2.smash_loc_drop_shift = true;
    CHECK(smash_differs(f2));
    MutationFlags f3;
    f3.dual_pru_drop_shift = true;
    CHECK(dual_differs(f3));
    MutationFlags f4;
    f4.dual_loc_min = true;
    CHECK(dual_differs(f4));
    MutationFlags f5;
    f5.dconv_loc_max = true;
    CHECK(dconv_differs(f5));
    MutationFlags f6;
    f6.dconv_pru_drop_shift = true;
    CHECK(dconv_differs(f6));
    CHECK(!smash_differs(MutationFlags{}));
    CHECK(!dual_differs(MutationFlags{}));
    CHECK(!dconv_differs(MutationFlags{}));
}

TEST_CASE("random multi-prime corpus stays lawful") {
    Corpus corpus(4242);
    GenOptions opts;
    for (int i = 0; i < 500; ++i) {
        BocksteinFunction a = corpus.function(opts);
        BocksteinFunction b = corpus.function(opts);
        CHECK(dual(dual(a)) == a);
        CHECK(duality_identity_check(a, b));
        CHECK(smash(a, b) == smash(b, a));
        CHECK(leq(lattice_min(a, b), lattice_max(a, b)));
    }
}

TEST_CASE("text form") {
    BocksteinFunction f = make(1, 1, 1, 1, {{3, PrimeTriple{3, 3, 2}}});
    CHECK(to_string(f) == "efun{q: 1, default: (1, 1, 1), 3: (3, 3, 2)}");
    CHECK(to_string(gg_d_function(f)).substr(0, 4) == "dfun");
    CHECK(to_string(constant(ExtInt::plus_inf())) ==
          "efun{q: inf, default: (inf, inf, inf)}");
}
