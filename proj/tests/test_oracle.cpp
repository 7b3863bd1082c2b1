#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dimalg/corpus.hpp"
#include "dimalg/oracle.hpp"

using namespace dimalg;

namespace {

BocksteinFunction make(ExtInt q, PrimeTriple def,
                       std::map<std::int64_t, PrimeTriple> exc = {}) {
    PrimePattern p;
    p.q = q;
    p.def = def;
    p.exc = std::move(exc);
    return BocksteinFunction::from_pattern(std::move(p));
}

GenOptions finite_opts(const std::vector<std::int64_t>& primes) {
    GenOptions opts;
    opts.allow_infinities = false;
    opts.prime_pool = primes;
    opts.max_exceptions = static_cast<int>(primes.size());
    return opts;
}

} // namespace

TEST_CASE("scopes pick the smallest fresh generic prime") {
    CHECK(make_scope({2, 3, 5}).generic == 7);
    CHECK(make_scope({2, 3, 5, 7}).generic == 11);
    CHECK(make_scope({}).generic == 2);
    CHECK(make_scope({3}).generic == 2);
    CHECK(make_scope({5, 3, 3}).primes == std::vector<std::int64_t>{3, 5});
    CHECK_THROWS_AS(make_scope({4}), DomainError);
    PrimeScope s = make_scope({2, 5});
    CHECK(s.all() == std::vector<std::int64_t>{2, 5, 3});
}

TEST_CASE("d-function of a concrete graded group") {
    PrimeScope scope = make_scope({2});
    GradedGroup a = single(0, group_prufer(2));
    DPattern d = d_function(a, scope);
    CHECK(d.pat.q == ExtInt::plus_inf());
    CHECK(d.pat.triple_at(2) == PrimeTriple{0, 1, 1});
    CHECK(d.pat.def == PrimeTriple{ExtInt::plus_inf(), ExtInt::plus_inf(),
                                   ExtInt::plus_inf()});
}

TEST_CASE("envelope of a concentrated divisible torsion group") {
    PrimeScope scope = make_scope({2});
    BocksteinFunction e = e_function(single(0, group_prufer(2)), scope);
    ExtInt inf = ExtInt::plus_inf();
    CHECK(e.q() == inf);
    CHECK(e.triple_at(2) == PrimeTriple{inf, 1, 0});
    CHECK(e.default_triple() == PrimeTriple{inf, inf, inf});
}

TEST_CASE("envelope rejects the zero graded group") {
    CHECK_THROWS_AS(e_function(GradedGroup{}, make_scope({2})), DomainError);
}

TEST_CASE("envelope inverts realization") {
    Corpus corpus(11);
    std::vector<std::int64_t> pool{2, 3, 5};
    GenOptions opts = finite_opts(pool);
    for (int i = 0; i < 250; ++i) {
        BocksteinFunction a = corpus.function(opts);
        PrimeScope scope = make_scope(pool);
        CHECK(e_function(gg_restrict(a, scope.all()), scope) == a);
    }
}

TEST_CASE("realization complement computes the dual exactly") {
    // Rebuilding a complement from the d-pattern of a realization and taking
    // its envelope lands on dual(a) precisely, not merely above it.
    Corpus corpus(12);
    std::vector<std::int64_t> pool{2, 3};
    GenOptions opts = finite_opts(pool);
    PrimeScope scope = make_scope(pool);
    for (int i = 0; i < 120; ++i) {
        BocksteinFunction a = corpus.function(opts);
        DPattern delta = d_function(gg_restrict(a, scope.all()), scope);
        GradedGroup complement;
        auto put = [&](ExtInt v, const BasicGroup& h) {
            REQUIRE(v.is_finite());
            complement = direct_sum(complement, single(-v.finite(), h));
        };
        put(delta.pat.q, group_q());
        for (std::int64_t p : scope.all()) {
            const PrimeTriple& t = delta.pat.triple_at(p);
            put(t.loc, group_localized(p));
            put(t.mod, group_cyclic(p, 1));
            put(t.pru, group_prufer(p));
        }
        CHECK(e_function(complement, scope) == dual(a));
    }
}

TEST_CASE("verification passes on random scoped corpora") {
    Corpus corpus(13);
    std::vector<std::int64_t> master{2, 3, 5};
    for (int i = 0; i < 150; ++i) {
        std::vector<std::int64_t> primes = corpus.primes_subset(master, 3);
        PrimeScope scope = make_scope(primes);
        GenOptions opts = finite_opts(scope.primes);
        BocksteinFunction a = corpus.function(opts);
        BocksteinFunction b = corpus.function(opts);
        VerifyReport s = verify_smash(a, b, scope);
        CHECK(s.pass);
        CHECK(!s.first_divergence.has_value());
        VerifyReport d = verify_dual(a, scope, {b});
        CHECK(d.pass);
        VerifyReport c = verify_d_conversion(a, scope);
        CHECK(c.pass);
    }
}

TEST_CASE("verification rejects out-of-scope exceptions") {
    PrimeScope scope = make_scope({2});
    BocksteinFunction a = make(0, PrimeTriple{0, 0, 0},
                               {{5, PrimeTriple{1, 1, 0}}});
    BocksteinFunction plain = make(0, PrimeTriple{0, 0, 0});
    CHECK_THROWS_AS(verify_smash(a, plain, scope), DomainError);
    CHECK_THROWS_AS(verify_smash(plain, a, scope), DomainError);
    CHECK_THROWS_AS(verify_dual(a, scope, {}), DomainError);
    CHECK_THROWS_AS(verify_dual(plain, scope, {a}), DomainError);
    CHECK_THROWS_AS(verify_d_conversion(a, scope), DomainError);
}

TEST_CASE("verify_dual needs finite values over the scope") {
    PrimeScope scope = make_scope({2});
    BocksteinFunction top = make(ExtInt::plus_inf(),
                                 PrimeTriple{ExtInt::plus_inf(), ExtInt::plus_inf(),
                                             ExtInt::plus_inf()});
    CHECK_THROWS_AS(verify_dual(top, scope, {}), DomainError);
}

TEST_CASE("every planted fault is caught") {
    std::vector<std::int64_t> pool{2, 3};
    PrimeScope scope = make_scope(pool);
    GenOptions opts = finite_opts(pool);

    auto caught_by = [&](const MutationFlags& flags, int which) {
        // which: 0 smash, 1 dual, 2 d-conversion.
        Corpus corpus(77);
        for (int i = 0; i < 400; ++i) {
            BocksteinFunction a = corpus.function(opts);
            BocksteinFunction b = corpus.function(opts);
            VerifyReport rep;
            if (which == 0)
                rep = verify_smash(a, b, scope, flags);
            else if (which == 1)
                rep = verify_dual(a, scope, {b}, flags);
            else
                rep = verify_d_conversion(a, scope, flags);
            if (!rep.pass) return true;
        }
        return false;
    };

    MutationFlags f;
    f.smash_pru_drop_shift = true;
    CHECK(caught_by(f, 0));
    f = MutationFlags{};
    f.smash_loc_drop_shift = true;
    CHECK(caught_by(f, 0));
    f = MutationFlags{};
    f.dual_pru_drop_shift = true;
    CHECK(caught_by(f, 1));
    f = MutationFlags{};
    f.dual_loc_min = true;
    CHECK(caught_by(f, 1));
    f = MutationFlags{};
    f.dconv_loc_max = true;
    CHECK(caught_by(f, 2));
    f = MutationFlags{};
    f.dconv_pru_drop_shift = true;
    CHECK(caught_by(f, 2));

    CHECK(!caught_by(MutationFlags{}, 0));
    CHECK(!caught_by(MutationFlags{}, 1));
    CHECK(!caught_by(MutationFlags{}, 2));
}

TEST_CASE("divergence reports name the first differing coordinate") {
    PrimeScope scope = make_scope({2});
    MutationFlags f;
    f.dconv_loc_max = true;
    Corpus corpus(5);
    GenOptions opts = finite_opts({2});
    for (int i = 0; i < 200; ++i) {
        BocksteinFunction a = corpus.function(opts);
        VerifyReport rep = verify_d_conversion(a, scope, f);
        if (rep.pass) continue;
        REQUIRE(rep.first_divergence.has_value());
        CHECK(rep.first_divergence->group == "Z_(p)");
        CHECK(rep.first_divergence->path_a_value != rep.first_divergence->path_b_value);
        return;
    }
    FAIL("no divergence found for the localized-slot fault");
}
