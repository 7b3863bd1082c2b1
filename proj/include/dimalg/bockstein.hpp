#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimalg/abelian.hpp"
#include "dimalg/errors.hpp"
#include "dimalg/extint.hpp"
#include "dimalg/graded.hpp"

namespace dimalg {

/// Values at one prime, in the fixed order (Z_(p), Z/p, Z/p^inf).
struct PrimeTriple {
    ExtInt loc{0};
    ExtInt mod{0};
    ExtInt pru{0};

    friend bool operator==(const PrimeTriple&, const PrimeTriple&) = default;
};

std::string to_string(const PrimeTriple& t);

/// Unvalidated storage shared by e-side functions and d-side patterns:
/// a Q value, a default triple applying at almost every prime, and finitely
/// many exceptional primes. normalize() drops exceptions equal to the default.
struct PrimePattern {
    ExtInt q{0};
    PrimeTriple def{};
    std::map<std::int64_t, PrimeTriple> exc;

    void normalize();
    /// Triple at a prime slot; nullopt addresses the default (generic) slot.
    const PrimeTriple& triple_at(std::optional<std::int64_t> p) const;
    ExtInt evaluate(const BocksteinGroup& h) const;
    std::vector<std::int64_t> exception_primes() const;

    friend bool operator==(const PrimePattern&, const PrimePattern&) = default;
};

/// Union of both exception-prime sets, ascending.
std::vector<std::int64_t> merged_primes(const PrimePattern& a, const PrimePattern& b);

/// The six axioms a pattern must satisfy at its default slot and at every
/// exceptional prime to be a Bockstein function (writing l, m, u for the
/// triple and q for the rational value; arithmetic in the +inf-dominant
/// convention):
///   1: u <= m        2: m <= u + 1     3: q <= l
///   4: m <= l        5: u <= max(q, l - 1)
///   6: l <= max(q, u + 1)
std::vector<AxiomViolation> check_axioms(const PrimePattern& p);

/// A validated pattern: construction enforces the six axioms everywhere.
class BocksteinFunction {
public:
    /// Validates; throws ValidationError listing every failed (prime, axiom).
    static BocksteinFunction from_pattern(PrimePattern p);
    /// The constant-zero function (the unit for the smash operation).
    static BocksteinFunction zero();

    const PrimePattern& pattern() const { return pat_; }
    ExtInt q() const { return pat_.q; }
    const PrimeTriple& default_triple() const { return pat_.def; }
    const std::map<std::int64_t, PrimeTriple>& exceptions() const { return pat_.exc; }
    const PrimeTriple& triple_at(std::optional<std::int64_t> p) const {
        return pat_.triple_at(p);
    }
    ExtInt evaluate(const BocksteinGroup& h) const { return pat_.evaluate(h); }

    friend bool operator==(const BocksteinFunction&, const BocksteinFunction&) = default;

private:
    explicit BocksteinFunction(PrimePattern p) : pat_(std::move(p)) {}
    PrimePattern pat_;
};

/// A d-side pattern (degreewise-dimension data). Deliberately a distinct type:
/// d-patterns need not satisfy the axioms and never feed the closed forms.
struct DPattern {
    PrimePattern pat;

    ExtInt evaluate(const BocksteinGroup& h) const { return pat.evaluate(h); }
    friend bool operator==(const DPattern&, const DPattern&) = default;
};

std::string to_string(const BocksteinFunction& f);
std::string to_string(const DPattern& d);

/// loc = pru at the slot (nullopt = default slot).
bool is_p_regular(const BocksteinFunction& f, std::optional<std::int64_t> p);

/// q = loc = pru at the slot; the branch condition for dual and the
/// sum-product operation. Implied by loc = pru whenever loc is finite.
bool is_p_constant(const BocksteinFunction& f, std::optional<std::int64_t> p);

/// Fault-injection switches for the differential test harness. Each flag
/// breaks exactly one clause of one closed form. Default: faithful formulas.
struct MutationFlags {
    bool smash_pru_drop_shift = false; // singular smash: min(m, u) for min(m, u+1)
    bool smash_loc_drop_shift = false; // singular smash: max(q, u') for max(q, u'+1)
    bool dual_pru_drop_shift = false;  // singular dual: -u for -u-1
    bool dual_loc_min = false;         // singular dual: min(-q, -u) for max(-q, -u)
    bool dconv_loc_max = false;        // d-conversion: max(q, u) for min(q, u)
    bool dconv_pru_drop_shift = false; // d-conversion: min(l, u) for min(l, u+1)
};

/// Smash closed form. Pointwise sum (gamma = a + b in the +inf-dominant
/// convention) everywhere; at a prime where both factors are singular
/// (loc != pru on both sides) the Prufer and localized values tighten to
///   u' = min(gamma_m, gamma_u + 1),  l' = max(gamma_q, u' + 1).
BocksteinFunction smash(const BocksteinFunction& a, const BocksteinFunction& b);
BocksteinFunction smash_with(const BocksteinFunction& a, const BocksteinFunction& b,
                             const MutationFlags& flags);

/// Order-reversing dual. At a p-constant slot the triple negates pointwise;
/// otherwise u* = -u - 1, l* = max(-q, -u), m* = -m (and q* = -q globally).
/// An involution: dual(dual(f)) = f.
BocksteinFunction dual(const BocksteinFunction& a);
BocksteinFunction dual_with(const BocksteinFunction& a, const MutationFlags& flags);

/// The d-side product law, computed directly from its own clauses (never by
/// composing dual and smash; duality_identity_check compares the two routes).
/// All sums here use the -inf-dominant convention (negate, add, negate back):
///   q'  = q_a +' q_b        m' = m_a +' m_b
///   u'  = max(u_a +' u_b, (m_a +' m_b) - 1)
///   l'  = l_a +' l_b  if a or b is p-constant at the slot,
///         max(u' + 1, q_a +' q_b)  otherwise.
BocksteinFunction sum_product(const BocksteinFunction& a, const BocksteinFunction& b);

/// sum_product(a, b) == dual(smash(dual(a), dual(b))), exactly.
bool duality_identity_check(const BocksteinFunction& a, const BocksteinFunction& b);

/// Pointwise shift by a finite k; preserves validity.
BocksteinFunction shift(const BocksteinFunction& a, std::int64_t k);

/// Pointwise order on all coordinates (Q, default slot, every exception).
bool leq(const BocksteinFunction& a, const BocksteinFunction& b);

/// The meet under leq, computed as dual(lattice_max(dual(a), dual(b))).
/// Equal to the pointwise minimum whenever that minimum is valid.
BocksteinFunction lattice_min(const BocksteinFunction& a, const BocksteinFunction& b);

/// The join under leq: the pointwise maximum (always valid).
BocksteinFunction lattice_max(const BocksteinFunction& a, const BocksteinFunction& b);

/// Degreewise-dimension pattern of the function's realizing graded class:
///   d(Q) = q,  d(Z/p) = m,  d(Z_(p)) = min(q, u),  d(Z/p^inf) = min(l, u + 1).
DPattern gg_d_function(const BocksteinFunction& a);
DPattern gg_d_function_with(const BocksteinFunction& a, const MutationFlags& flags);

/// A graded group realizing the function's finite coordinates over the given
/// primes: one summand Sigma^q(Q) plus, per listed prime, Sigma^l(Z_(p)),
/// Sigma^m(Z/p), Sigma^u(Z/p^inf) for the finite values (+inf contributes no
/// summand; -inf is rejected with DomainError).
GradedGroup gg_restrict(const BocksteinFunction& a, const std::vector<std::int64_t>& primes);

} // namespace dimalg
