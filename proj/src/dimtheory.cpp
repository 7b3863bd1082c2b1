#include "dimalg/dimtheory.hpp"

#include <set>
#include <sstream>

namespace dimalg {

namespace {

// Every coordinate of the pattern: q, default triple, exception triples.
std::vector<ExtInt> all_values(const PrimePattern& p) {
    std::vector<ExtInt> vs{p.q, p.def.loc, p.def.mod, p.def.pru};
    for (const auto& [prime, t] : p.exc) {
        vs.push_back(t.loc);
        vs.push_back(t.mod);
        vs.push_back(t.pru);
    }
    return vs;
}

} // namespace

CompactumProfile CompactumProfile::from_function(BocksteinFunction d) {
    bool all_zero = true;
    bool all_pos = true;
    for (ExtInt v : all_values(d.pattern())) {
        if (v != ExtInt{0}) all_zero = false;
        if (!(ExtInt{1} <= v)) all_pos = false;
        if (v.is_minus_inf())
            throw DomainError("profile has a -inf coordinate");
    }
    if (!all_zero && !all_pos)
        throw DomainError("profile must be identically zero or >= 1 everywhere: " +
                          to_string(d));
    return CompactumProfile(std::move(d));
}

CompactumProfile CompactumProfile::zero() {
    return CompactumProfile(BocksteinFunction::zero());
}

std::string to_string(const CompactumProfile& x) {
    std::string s = to_string(x.d());
    return "profile" + s.substr(4); // swap the "efun" keyword
}

ExtInt dim_over_basis(const BocksteinFunction& d, const BocksteinBasisSet& basis) {
    ExtInt best = ExtInt::minus_inf();
    if (basis.has_q()) best = max(best, d.q());
    auto fold_slot = [&best, &d](const BasisTriple& member, std::optional<std::int64_t> p) {
        const PrimeTriple& t = d.triple_at(p);
        if (member.loc) best = max(best, t.loc);
        if (member.mod) best = max(best, t.mod);
        if (member.pru) best = max(best, t.pru);
    };
    std::set<std::int64_t> primes;
    for (const auto& [p, t] : basis.exceptions()) primes.insert(p);
    for (const auto& [p, t] : d.exceptions()) primes.insert(p);
    for (std::int64_t p : primes) fold_slot(basis.triple_at(p), p);
    fold_slot(basis.default_triple(), std::nullopt);
    return best;
}

ExtInt dim_with_coefficients(const CompactumProfile& x, const FiniteSumGroup& g) {
    return dim_over_basis(x.d(), bockstein_basis(g));
}

namespace {

// The product theorem's own clauses, written exactly as stated for profiles:
// pointwise sums, with the Prufer/localized tightening at primes where both
// factors are singular (loc != pru). Profiles carry no -inf, which is what
// makes this transcription and the general d-side law agree.
PrimeTriple product_clause_triple(ExtInt qa, const PrimeTriple& ta, ExtInt qb,
                                  const PrimeTriple& tb) {
    if (ta.loc == ta.pru || tb.loc == tb.pru)
        return {add(ta.loc, tb.loc), add(ta.mod, tb.mod), add(ta.pru, tb.pru)};
    ExtInt m = add(ta.mod, tb.mod);
    ExtInt u = max(add(ta.pru, tb.pru), add(m, -1));
    ExtInt l = max(add(u, 1), add(qa, qb));
    return {l, m, u};
}

BocksteinFunction product_clause_route(const BocksteinFunction& a, const BocksteinFunction& b) {
    const PrimePattern& pa = a.pattern();
    const PrimePattern& pb = b.pattern();
    PrimePattern r;
    r.q = add(pa.q, pb.q);
    r.def = product_clause_triple(pa.q, pa.def, pb.q, pb.def);
    for (std::int64_t p : merged_primes(pa, pb))
        r.exc.emplace(p, product_clause_triple(pa.q, pa.triple_at(p), pb.q, pb.triple_at(p)));
    return BocksteinFunction::from_pattern(std::move(r));
}

} // namespace

CompactumProfile dim_of_smash(const CompactumProfile& x, const CompactumProfile& y) {
    BocksteinFunction via_clauses = product_clause_route(x.d(), y.d());
    BocksteinFunction via_law = sum_product(x.d(), y.d());
    if (!(via_clauses == via_law))
        throw InternalError("product profile routes disagree: clauses give " +
                            to_string(via_clauses) + ", d-side law gives " +
                            to_string(via_law));
    try {
        return CompactumProfile::from_function(via_law);
    } catch (const DomainError& e) {
        throw InternalError(std::string("product of profiles is not a profile: ") + e.what());
    }
}

ExtInt dim_graded_coefficients(const CompactumProfile& x, const GradedGroup& a) {
    ExtInt best = ExtInt::minus_inf();
    for (const auto& [n, g] : a.terms())
        best = max(best, add(dim_with_coefficients(x, g), -n));
    return best;
}

bool sp_absolute_extensor(const CompactumProfile& x, const BocksteinFunction& ek) {
    return leq(x.d(), ek);
}

std::string to_string(const MooreSpaceSpec& m) {
    std::ostringstream os;
    os << "moore{";
    bool first = true;
    for (const auto& [g, deg] : m.summands) {
        if (!first) os << ", ";
        os << "M(" << to_string(g) << ", " << deg << ")";
        first = false;
    }
    if (!first) os << ", ";
    os << "generic: " << to_string(m.generic_pattern) << "}";
    return os.str();
}

MooreSpaceSpec moore_space_spec(const BocksteinFunction& alpha) {
    for (ExtInt v : all_values(alpha.pattern()))
        if (!(ExtInt{1} <= v))
            throw DomainError("moore_space_spec requires every value >= 1, found " +
                              to_string(v) + " in " + to_string(alpha));
    MooreSpaceSpec spec;
    if (alpha.q().is_finite()) spec.summands.emplace_back(group_q(), alpha.q().finite());
    for (const auto& [p, t] : alpha.exceptions()) {
        if (t.loc.is_finite()) spec.summands.emplace_back(group_localized(p), t.loc.finite());
        if (t.mod.is_finite()) spec.summands.emplace_back(group_cyclic(p, 1), t.mod.finite());
        if (t.pru.is_finite()) spec.summands.emplace_back(group_prufer(p), t.pru.finite());
    }
    spec.generic_pattern = alpha.default_triple();
    return spec;
}

bool realization_precondition(const BocksteinFunction& alpha, std::int64_t n) {
    for (ExtInt v : all_values(alpha.pattern()))
        if (!(ExtInt{1} <= v && v <= ExtInt{n})) return false;
    return true;
}

CompactumProfile test_space(const FiniteSumGroup& g, std::int64_t n) {
    if (g.is_zero()) throw DomainError("test_space requires a nonzero group");
    if (n <= 1) throw DomainError("test_space requires n > 1, got " + std::to_string(n));

    auto value_for = [&g, n](const BasicGroup& h) {
        return max(add(ExtInt{n}, neg(dim_group(h, g))), ExtInt{1});
    };
    std::vector<std::int64_t> ps = primes_of(g);
    std::int64_t generic = fresh_prime({&g});
    auto triple_for = [&value_for](std::int64_t p) {
        return PrimeTriple{value_for(group_localized(p)), value_for(group_cyclic(p, 1)),
                           value_for(group_prufer(p))};
    };
    PrimePattern pat;
    pat.q = value_for(group_q());
    pat.def = triple_for(generic);
    for (std::int64_t p : ps) pat.exc.emplace(p, triple_for(p));

    BocksteinFunction d = BocksteinFunction::zero();
    try {
        d = BocksteinFunction::from_pattern(std::move(pat));
    } catch (const ValidationError& e) {
        throw InternalError(std::string("test_space profile failed validation: ") + e.what());
    }
    for (ExtInt v : all_values(d.pattern()))
        if (!(ExtInt{1} <= v && v <= ExtInt{n}))
            throw InternalError("test_space value " + to_string(v) + " escapes [1, " +
                                std::to_string(n) + "]");
    try {
        return CompactumProfile::from_function(std::move(d));
    } catch (const DomainError& e) {
        throw InternalError(std::string("test_space result is not a profile: ") + e.what());
    }
}

} // namespace dimalg
