#include "dimalg/oracle.hpp"

#include <algorithm>
#include <set>

namespace dimalg {

namespace {

const char* family_name(BFamily f) {
    switch (f) {
    case BFamily::Q: return "Q";
    case BFamily::Localized: return "Z_(p)";
    case BFamily::Cyclic: return "Z/p";
    case BFamily::Prufer: return "Z/p^inf";
    }
    return "?";
}

constexpr BFamily kTripleFamilies[3] = {BFamily::Localized, BFamily::Cyclic,
                                        BFamily::Prufer};

void check_scope(const PrimeScope& scope) {
    std::set<std::int64_t> seen;
    for (std::int64_t p : scope.primes) {
        if (!is_prime(p)) throw DomainError("scope contains non-prime " + std::to_string(p));
        if (!seen.insert(p).second)
            throw DomainError("scope lists prime " + std::to_string(p) + " twice");
    }
    if (!is_prime(scope.generic))
        throw DomainError("scope generic must be prime, got " + std::to_string(scope.generic));
    if (seen.count(scope.generic))
        throw DomainError("scope generic " + std::to_string(scope.generic) +
                          " collides with a scope prime");
}

void check_in_scope(const BocksteinFunction& f, const PrimeScope& scope, const char* who) {
    std::set<std::int64_t> allowed(scope.primes.begin(), scope.primes.end());
    for (const auto& [p, t] : f.exceptions())
        if (!allowed.count(p))
            throw DomainError(std::string(who) + " has an exception at prime " +
                              std::to_string(p) + " outside the scope");
}

// Coordinates in the fixed comparison order: Q, then each scope prime's
// (Z_(p), Z/p, Z/p^inf), then the generic slot's triple.
struct Coordinate {
    std::optional<std::int64_t> prime; // empty for Q and for the generic slot
    std::optional<BFamily> fam;        // empty for Q
};

std::vector<Coordinate> coordinates(const PrimeScope& scope) {
    std::vector<Coordinate> cs;
    cs.push_back({std::nullopt, std::nullopt});
    for (std::int64_t p : scope.primes)
        for (BFamily f : kTripleFamilies) cs.push_back({p, f});
    for (BFamily f : kTripleFamilies) cs.push_back({std::nullopt, f});
    return cs;
}

ExtInt read_coord(const PrimePattern& pat, const Coordinate& c) {
    if (!c.fam) return pat.q;
    const PrimeTriple& t = c.prime ? pat.triple_at(*c.prime) : pat.def;
    switch (*c.fam) {
    case BFamily::Localized: return t.loc;
    case BFamily::Cyclic: return t.mod;
    case BFamily::Prufer: return t.pru;
    default: break;
    }
    throw InternalError("read_coord: bad family");
}

std::optional<Divergence> first_difference(const PrimePattern& a, const PrimePattern& b,
                                           const PrimeScope& scope) {
    for (const Coordinate& c : coordinates(scope)) {
        ExtInt va = read_coord(a, c);
        ExtInt vb = read_coord(b, c);
        if (va != vb)
            return Divergence{c.prime, c.fam ? family_name(*c.fam) : "Q",
                              to_string(va), to_string(vb)};
    }
    return std::nullopt;
}

} // namespace

std::vector<std::int64_t> PrimeScope::all() const {
    std::vector<std::int64_t> ps = primes;
    ps.push_back(generic);
    return ps;
}

PrimeScope make_scope(std::vector<std::int64_t> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    PrimeScope s;
    s.primes = std::move(primes);
    std::set<std::int64_t> used(s.primes.begin(), s.primes.end());
    for (std::int64_t p = 2;; ++p)
        if (is_prime(p) && !used.count(p)) {
            s.generic = p;
            break;
        }
    check_scope(s);
    return s;
}

DPattern d_function(const GradedGroup& a, const PrimeScope& scope) {
    check_scope(scope);
    auto triple_for = [&a](std::int64_t p) {
        return PrimeTriple{dim_coeff(a, group_localized(p)), dim_coeff(a, group_cyclic(p, 1)),
                           dim_coeff(a, group_prufer(p))};
    };
    PrimePattern pat;
    pat.q = dim_coeff(a, group_q());
    pat.def = triple_for(scope.generic);
    for (std::int64_t p : scope.primes) pat.exc.emplace(p, triple_for(p));
    pat.normalize();
    return DPattern{std::move(pat)};
}

BocksteinFunction e_function(const GradedGroup& a, const PrimeScope& scope) {
    check_scope(scope);
    if (a.is_zero())
        throw DomainError("e_function: the zero graded group carries no envelope");

    std::vector<BasicGroup> universe{group_z(), group_q()};
    for (std::int64_t p : scope.all()) {
        universe.push_back(group_cyclic(p, 1));
        universe.push_back(group_cyclic(p, 2));
        universe.push_back(group_prufer(p));
        universe.push_back(group_localized(p));
    }
    std::vector<ExtInt> coeff_dim;
    coeff_dim.reserve(universe.size());
    for (const BasicGroup& f : universe) coeff_dim.push_back(dim_coeff(a, f));

    auto envelope = [&](const BocksteinGroup& h) {
        BasicGroup hb = to_basic(h);
        ExtInt best = ExtInt::minus_inf();
        for (std::size_t i = 0; i < universe.size(); ++i) {
            ExtInt d = dim_group(universe[i], hb);
            if (!d.is_finite()) continue;
            best = max(best, add(coeff_dim[i], -d.finite()));
        }
        return best;
    };

    PrimePattern pat;
    pat.q = envelope({BFamily::Q, 0});
    auto triple_for = [&](std::int64_t p) {
        return PrimeTriple{envelope({BFamily::Localized, p}), envelope({BFamily::Cyclic, p}),
                           envelope({BFamily::Prufer, p})};
    };
    pat.def = triple_for(scope.generic);
    for (std::int64_t p : scope.primes) pat.exc.emplace(p, triple_for(p));
    try {
        return BocksteinFunction::from_pattern(std::move(pat));
    } catch (const ValidationError& e) {
        throw InternalError(std::string("e_function of a concrete graded group failed "
                                        "validation: ") +
                            e.what());
    }
}

VerifyReport verify_smash(const BocksteinFunction& a, const BocksteinFunction& b,
                          const PrimeScope& scope, const MutationFlags& flags,
                          const std::string& case_id) {
    check_scope(scope);
    check_in_scope(a, scope, "first factor");
    check_in_scope(b, scope, "second factor");
    VerifyReport rep;
    rep.case_id = case_id;
    rep.path_a = "closed-form smash";
    rep.path_b = "envelope of concrete smash";
    BocksteinFunction closed = BocksteinFunction::zero();
    try {
        closed = smash_with(a, b, flags);
    } catch (const Error& e) {
        rep.pass = false;
        rep.note = std::string("closed form failed: ") + e.what();
        return rep;
    }
    GradedGroup concrete = smash(gg_restrict(a, scope.all()), gg_restrict(b, scope.all()));
    BocksteinFunction envelope = e_function(concrete, scope);
    rep.first_divergence = first_difference(closed.pattern(), envelope.pattern(), scope);
    rep.pass = !rep.first_divergence.has_value();
    return rep;
}

VerifyReport verify_dual(const BocksteinFunction& a, const PrimeScope& scope,
                         const std::vector<BocksteinFunction>& extra_candidates,
                         const MutationFlags& flags, const std::string& case_id) {
    check_scope(scope);
    check_in_scope(a, scope, "argument");
    for (const BocksteinFunction& g : extra_candidates)
        check_in_scope(g, scope, "extra candidate");
    VerifyReport rep;
    rep.case_id = case_id;
    rep.path_a = "closed-form dual";
    rep.path_b = "complement property over concrete candidates";
    BocksteinFunction d = BocksteinFunction::zero();
    try {
        d = dual_with(a, flags);
    } catch (const Error& e) {
        rep.pass = false;
        rep.note = std::string("closed form failed: ") + e.what();
        return rep;
    }

    // Pairing bound: smash(dual(a), a) must be >= 0 in every coordinate.
    BocksteinFunction paired = smash(d, a);
    for (const Coordinate& c : coordinates(scope)) {
        ExtInt v = read_coord(paired.pattern(), c);
        if (v < ExtInt{0}) {
            rep.pass = false;
            rep.first_divergence =
                Divergence{c.prime, c.fam ? family_name(*c.fam) : "Q", to_string(v), ">= 0"};
            rep.note = "smash(dual(a), a) dips below zero";
            return rep;
        }
    }

    // Minimality: dual(a) must sit below every complement candidate. The
    // concrete minimal complement, rebuilt degree-by-degree from the
    // d-pattern of a realization of a, is always among the candidates.
    std::vector<BocksteinFunction> candidates;
    DPattern delta = d_function(gg_restrict(a, scope.all()), scope);
    GradedGroup complement;
    for (const Coordinate& c : coordinates(scope)) {
        ExtInt v = read_coord(delta.pat, c);
        if (!v.is_finite())
            throw DomainError("verify_dual requires a finite-valued argument over the scope");
        std::int64_t p = c.prime ? *c.prime : scope.generic;
        BasicGroup h = c.fam ? to_basic(BocksteinGroup{*c.fam, p}) : group_q();
        complement = direct_sum(complement, single(-v.finite(), h));
    }
    candidates.push_back(e_function(complement, scope));
    candidates.insert(candidates.end(), extra_candidates.begin(), extra_candidates.end());

    for (const BocksteinFunction& g : candidates) {
        BocksteinFunction s = smash(g, a);
        bool complementary = true;
        for (const Coordinate& c : coordinates(scope))
            if (read_coord(s.pattern(), c) < ExtInt{0}) {
                complementary = false;
                break;
            }
        if (!complementary) continue;
        if (!leq(d, g)) {
            for (const Coordinate& c : coordinates(scope)) {
                ExtInt vd = read_coord(d.pattern(), c);
                ExtInt vg = read_coord(g.pattern(), c);
                if (!(vd <= vg)) {
                    rep.pass = false;
                    rep.first_divergence = Divergence{c.prime,
                                                      c.fam ? family_name(*c.fam) : "Q",
                                                      to_string(vd), "<= " + to_string(vg)};
                    rep.note = "dual(a) exceeds a complement candidate";
                    return rep;
                }
            }
            // Everything in sight has its exceptions inside the scope, so a
            // leq failure must show up at a scanned coordinate.
            throw InternalError("verify_dual: order violation outside the scanned coordinates");
        }
    }
    rep.pass = true;
    return rep;
}

VerifyReport verify_d_conversion(const BocksteinFunction& a, const PrimeScope& scope,
                                 const MutationFlags& flags, const std::string& case_id) {
    check_scope(scope);
    check_in_scope(a, scope, "argument");
    VerifyReport rep;
    rep.case_id = case_id;
    rep.path_a = "closed-form degreewise dimensions";
    rep.path_b = "direct dimensions of a realization";
    DPattern closed = gg_d_function_with(a, flags);
    DPattern concrete = d_function(gg_restrict(a, scope.all()), scope);
    rep.first_divergence = first_difference(closed.pat, concrete.pat, scope);
    rep.pass = !rep.first_divergence.has_value();
    return rep;
}

} // namespace dimalg
