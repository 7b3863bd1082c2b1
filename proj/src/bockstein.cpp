#include "dimalg/bockstein.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dimalg {

namespace {

// -inf-dominant sum: negate, add under the +inf convention, negate back.
ExtInt dual_add(ExtInt a, ExtInt b) { return neg(add(neg(a), neg(b))); }

bool slot_constant(ExtInt q, const PrimeTriple& t) {
    return q == t.loc && t.loc == t.pru;
}

} // namespace

std::string to_string(const PrimeTriple& t) {
    return "(" + to_string(t.loc) + ", " + to_string(t.mod) + ", " + to_string(t.pru) + ")";
}

void PrimePattern::normalize() {
    for (auto it = exc.begin(); it != exc.end();)
        it = it->second == def ? exc.erase(it) : std::next(it);
}

const PrimeTriple& PrimePattern::triple_at(std::optional<std::int64_t> p) const {
    if (!p) return def;
    auto it = exc.find(*p);
    return it == exc.end() ? def : it->second;
}

ExtInt PrimePattern::evaluate(const BocksteinGroup& h) const {
    if (h.fam == BFamily::Q) return q;
    const PrimeTriple& t = triple_at(h.p);
    switch (h.fam) {
    case BFamily::Localized: return t.loc;
    case BFamily::Cyclic: return t.mod;
    case BFamily::Prufer: return t.pru;
    default: break;
    }
    throw InternalError("PrimePattern::evaluate: bad family");
}

std::vector<std::int64_t> PrimePattern::exception_primes() const {
    std::vector<std::int64_t> ps;
    ps.reserve(exc.size());
    for (const auto& [p, t] : exc) ps.push_back(p);
    return ps;
}

std::vector<std::int64_t> merged_primes(const PrimePattern& a, const PrimePattern& b) {
    std::set<std::int64_t> ps;
    for (const auto& [p, t] : a.exc) ps.insert(p);
    for (const auto& [p, t] : b.exc) ps.insert(p);
    return {ps.begin(), ps.end()};
}

namespace {

void check_slot(ExtInt q, const PrimeTriple& t, std::optional<std::int64_t> prime,
                std::vector<AxiomViolation>& out) {
    auto fail = [&](int axiom) { out.push_back({prime, axiom}); };
    if (!(t.pru <= t.mod)) fail(1);
    if (!(t.mod <= add(t.pru, 1))) fail(2);
    if (!(q <= t.loc)) fail(3);
    if (!(t.mod <= t.loc)) fail(4);
    if (!(t.pru <= max(q, add(t.loc, -1)))) fail(5);
    if (!(t.loc <= max(q, add(t.pru, 1)))) fail(6);
}

} // namespace

std::vector<AxiomViolation> check_axioms(const PrimePattern& p) {
    std::vector<AxiomViolation> out;
    check_slot(p.q, p.def, std::nullopt, out);
    for (const auto& [prime, t] : p.exc) {
        if (!is_prime(prime)) out.push_back({prime, 0});
        check_slot(p.q, t, prime, out);
    }
    return out;
}

std::string describe(const AxiomViolation& v) {
    std::string where = v.prime ? "p=" + std::to_string(*v.prime) : "generic";
    if (v.axiom == 0) return "(" + where + ", non-prime exception)";
    return "(" + where + ", axiom " + std::to_string(v.axiom) + ")";
}

BocksteinFunction BocksteinFunction::from_pattern(PrimePattern p) {
    p.normalize();
    std::vector<AxiomViolation> vs = check_axioms(p);
    if (!vs.empty()) {
        std::ostringstream os;
        os << "pattern fails validation:";
        for (const AxiomViolation& v : vs) os << " " << describe(v);
        throw ValidationError(os.str(), std::move(vs));
    }
    return BocksteinFunction(std::move(p));
}

BocksteinFunction BocksteinFunction::zero() {
    return BocksteinFunction(PrimePattern{});
}

namespace {

std::string pattern_text(const char* keyword, const PrimePattern& p) {
    std::ostringstream os;
    os << keyword << "{q: " << to_string(p.q) << ", default: " << to_string(p.def);
    for (const auto& [prime, t] : p.exc) os << ", " << prime << ": " << to_string(t);
    os << "}";
    return os.str();
}

} // namespace

std::string to_string(const BocksteinFunction& f) { return pattern_text("efun", f.pattern()); }
std::string to_string(const DPattern& d) { return pattern_text("dfun", d.pat); }

bool is_p_regular(const BocksteinFunction& f, std::optional<std::int64_t> p) {
    const PrimeTriple& t = f.triple_at(p);
    return t.loc == t.pru;
}

bool is_p_constant(const BocksteinFunction& f, std::optional<std::int64_t> p) {
    return slot_constant(f.q(), f.triple_at(p));
}

namespace {

// Wraps a computed pattern; validation failure here means a theorem-level
// contract was broken, so it surfaces as InternalError, never as a clamp.
BocksteinFunction seal(PrimePattern p, const char* op) {
    try {
        return BocksteinFunction::from_pattern(std::move(p));
    } catch (const ValidationError& e) {
        throw InternalError(std::string(op) + " produced an invalid result: " + e.what());
    }
}

PrimeTriple smash_triple(ExtInt qa, const PrimeTriple& ta, ExtInt qb, const PrimeTriple& tb,
                         const MutationFlags& flags) {
    ExtInt gq = add(qa, qb);
    PrimeTriple g{add(ta.loc, tb.loc), add(ta.mod, tb.mod), add(ta.pru, tb.pru)};
    bool a_regular = ta.loc == ta.pru;
    bool b_regular = tb.loc == tb.pru;
    if (a_regular || b_regular) return g;
    ExtInt u = min(g.mod, flags.smash_pru_drop_shift ? g.pru : add(g.pru, 1));
    ExtInt l = max(gq, flags.smash_loc_drop_shift ? u : add(u, 1));
    return {l, g.mod, u};
}

PrimeTriple dual_triple(ExtInt q, const PrimeTriple& t, const MutationFlags& flags) {
    if (slot_constant(q, t)) return {neg(t.loc), neg(t.mod), neg(t.pru)};
    ExtInt u = flags.dual_pru_drop_shift ? neg(t.pru) : add(neg(t.pru), -1);
    ExtInt l = flags.dual_loc_min ? min(neg(q), neg(t.pru)) : max(neg(q), neg(t.pru));
    return {l, neg(t.mod), u};
}

PrimeTriple sum_triple(ExtInt qa, const PrimeTriple& ta, ExtInt qb, const PrimeTriple& tb) {
    ExtInt m = dual_add(ta.mod, tb.mod);
    ExtInt u = max(dual_add(ta.pru, tb.pru), add(m, -1));
    ExtInt l;
    if (slot_constant(qa, ta) || slot_constant(qb, tb))
        l = dual_add(ta.loc, tb.loc);
    else
        l = max(add(u, 1), dual_add(qa, qb));
    return {l, m, u};
}

PrimeTriple dconv_triple(ExtInt q, const PrimeTriple& t, const MutationFlags& flags) {
    ExtInt dl = flags.dconv_loc_max ? max(q, t.pru) : min(q, t.pru);
    ExtInt du = min(t.loc, flags.dconv_pru_drop_shift ? t.pru : add(t.pru, 1));
    return {dl, t.mod, du};
}

} // namespace

BocksteinFunction smash_with(const BocksteinFunction& a, const BocksteinFunction& b,
                             const MutationFlags& flags) {
    const PrimePattern& pa = a.pattern();
    const PrimePattern& pb = b.pattern();
    PrimePattern r;
    r.q = add(pa.q, pb.q);
    r.def = smash_triple(pa.q, pa.def, pb.q, pb.def, flags);
    for (std::int64_t p : merged_primes(pa, pb))
        r.exc.emplace(p, smash_triple(pa.q, pa.triple_at(p), pb.q, pb.triple_at(p), flags));
    return seal(std::move(r), "smash");
}

BocksteinFunction smash(const BocksteinFunction& a, const BocksteinFunction& b) {
    return smash_with(a, b, MutationFlags{});
}

BocksteinFunction dual_with(const BocksteinFunction& a, const MutationFlags& flags) {
    const PrimePattern& pa = a.pattern();
    PrimePattern r;
    r.q = neg(pa.q);
    r.def = dual_triple(pa.q, pa.def, flags);
    for (const auto& [p, t] : pa.exc) r.exc.emplace(p, dual_triple(pa.q, t, flags));
    return seal(std::move(r), "dual");
}

BocksteinFunction dual(const BocksteinFunction& a) { return dual_with(a, MutationFlags{}); }

BocksteinFunction sum_product(const BocksteinFunction& a, const BocksteinFunction& b) {
    const PrimePattern& pa = a.pattern();
    const PrimePattern& pb = b.pattern();
    PrimePattern r;
    r.q = dual_add(pa.q, pb.q);
    r.def = sum_triple(pa.q, pa.def, pb.q, pb.def);
    for (std::int64_t p : merged_primes(pa, pb))
        r.exc.emplace(p, sum_triple(pa.q, pa.triple_at(p), pb.q, pb.triple_at(p)));
    return seal(std::move(r), "sum_product");
}

bool duality_identity_check(const BocksteinFunction& a, const BocksteinFunction& b) {
    return sum_product(a, b) == dual(smash(dual(a), dual(b)));
}

BocksteinFunction shift(const BocksteinFunction& a, std::int64_t k) {
    ExtInt kk{k};
    auto bump = [kk](const PrimeTriple& t) {
        return PrimeTriple{add(t.loc, kk), add(t.mod, kk), add(t.pru, kk)};
    };
    PrimePattern r;
    r.q = add(a.q(), kk);
    r.def = bump(a.default_triple());
    for (const auto& [p, t] : a.exceptions()) r.exc.emplace(p, bump(t));
    return seal(std::move(r), "shift");
}

bool leq(const BocksteinFunction& a, const BocksteinFunction& b) {
    if (!(a.q() <= b.q())) return false;
    auto tri_leq = [](const PrimeTriple& x, const PrimeTriple& y) {
        return x.loc <= y.loc && x.mod <= y.mod && x.pru <= y.pru;
    };
    if (!tri_leq(a.default_triple(), b.default_triple())) return false;
    for (std::int64_t p : merged_primes(a.pattern(), b.pattern()))
        if (!tri_leq(a.triple_at(p), b.triple_at(p))) return false;
    return true;
}

BocksteinFunction lattice_max(const BocksteinFunction& a, const BocksteinFunction& b) {
    auto tri_max = [](const PrimeTriple& x, const PrimeTriple& y) {
        return PrimeTriple{max(x.loc, y.loc), max(x.mod, y.mod), max(x.pru, y.pru)};
    };
    PrimePattern r;
    r.q = max(a.q(), b.q());
    r.def = tri_max(a.default_triple(), b.default_triple());
    for (std::int64_t p : merged_primes(a.pattern(), b.pattern()))
        r.exc.emplace(p, tri_max(a.triple_at(p), b.triple_at(p)));
    return seal(std::move(r), "lattice_max");
}

BocksteinFunction lattice_min(const BocksteinFunction& a, const BocksteinFunction& b) {
    // Every axiom bounds a slot by a max of raised slots, so the join is
    // safely pointwise; a pointwise meet can leave the valid set. The meet
    // is therefore taken as the dual image of the join, which agrees with
    // the pointwise minimum whenever that minimum is itself valid.
    return dual(lattice_max(dual(a), dual(b)));
}

DPattern gg_d_function_with(const BocksteinFunction& a, const MutationFlags& flags) {
    const PrimePattern& pa = a.pattern();
    PrimePattern r;
    r.q = pa.q;
    r.def = dconv_triple(pa.q, pa.def, flags);
    for (const auto& [p, t] : pa.exc) r.exc.emplace(p, dconv_triple(pa.q, t, flags));
    r.normalize();
    return DPattern{std::move(r)};
}

DPattern gg_d_function(const BocksteinFunction& a) {
    return gg_d_function_with(a, MutationFlags{});
}

GradedGroup gg_restrict(const BocksteinFunction& a, const std::vector<std::int64_t>& primes) {
    auto realize = [](ExtInt v, const BasicGroup& g, GradedGroup& acc) {
        if (v.is_minus_inf())
            throw DomainError("gg_restrict: -inf coordinate at " + to_string(g) +
                              " has no finitely-supported realization");
        if (v.is_plus_inf()) return;
        acc = direct_sum(acc, single(v.finite(), g));
    };
    GradedGroup out;
    realize(a.q(), group_q(), out);
    std::set<std::int64_t> seen;
    for (std::int64_t p : primes) {
        if (!is_prime(p)) throw DomainError("gg_restrict: non-prime " + std::to_string(p));
        if (!seen.insert(p).second) continue;
        const PrimeTriple& t = a.triple_at(p);
        realize(t.loc, group_localized(p), out);
        realize(t.mod, group_cyclic(p, 1), out);
        realize(t.pru, group_prufer(p), out);
    }
    return out;
}

} // namespace dimalg
