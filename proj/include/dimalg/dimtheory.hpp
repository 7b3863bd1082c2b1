#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dimalg/abelian.hpp"
#include "dimalg/bockstein.hpp"
#include "dimalg/graded.hpp"

namespace dimalg {

/// Dimension data d_X of a compactum: a Bockstein function subject to the
/// positivity rule (identically zero, or >= 1 in every coordinate; -inf
/// never occurs, +inf may).
class CompactumProfile {
public:
    /// Validates the positivity rule; throws DomainError on failure.
    static CompactumProfile from_function(BocksteinFunction d);
    /// The point profile (identically zero).
    static CompactumProfile zero();

    const BocksteinFunction& d() const { return d_; }
    bool is_zero() const { return d_ == BocksteinFunction::zero(); }

    friend bool operator==(const CompactumProfile&, const CompactumProfile&) = default;

private:
    explicit CompactumProfile(BocksteinFunction d) : d_(std::move(d)) {}
    BocksteinFunction d_;
};

std::string to_string(const CompactumProfile& x);

/// sup of d over the basis members, evaluated at the basis exceptions, the
/// function's exceptions, and the generic slot. Empty basis gives -inf.
ExtInt dim_over_basis(const BocksteinFunction& d, const BocksteinBasisSet& basis);

/// Dimension of X with coefficients in G: sup of d_X over the Bockstein
/// basis of G. The zero group gives -inf.
ExtInt dim_with_coefficients(const CompactumProfile& x, const FiniteSumGroup& g);

/// Profile of a product: computed twice, once from the product theorem's own
/// clauses and once as sum_product(d_X, d_Y); any disagreement is an
/// InternalError, never a silently chosen side.
CompactumProfile dim_of_smash(const CompactumProfile& x, const CompactumProfile& y);

/// sup over supported degrees n of dim_with_coefficients(x, a(n)) - n;
/// the zero graded group gives -inf.
ExtInt dim_graded_coefficients(const CompactumProfile& x, const GradedGroup& a);

/// Whether every coordinate of d_X sits under the envelope function of a
/// coefficient complex: leq(d_X, e_k).
bool sp_absolute_extensor(const CompactumProfile& x, const BocksteinFunction& ek);

/// Blueprint of a space realizing a function with values >= 1: concrete
/// summands (group, degree) for the finite coordinates at Q and the
/// exceptional primes, plus the default triple as the symbolic pattern
/// repeating at every other prime.
struct MooreSpaceSpec {
    std::vector<std::pair<BasicGroup, std::int64_t>> summands;
    PrimeTriple generic_pattern;

    friend bool operator==(const MooreSpaceSpec&, const MooreSpaceSpec&) = default;
};

std::string to_string(const MooreSpaceSpec& m);

/// Requires every value of alpha to be >= 1 (DomainError otherwise).
MooreSpaceSpec moore_space_spec(const BocksteinFunction& alpha);

/// True iff every value of alpha lies in [1, n].
bool realization_precondition(const BocksteinFunction& alpha, std::int64_t n);

/// The profile of a test space for (G, n): at each coefficient H its value
/// is max(n - dim_group(H, G), 1). Requires G nonzero and n > 1; the result
/// is checked to be a valid profile with values in [1, n] (InternalError on
/// violation, since the construction guarantees it).
CompactumProfile test_space(const FiniteSumGroup& g, std::int64_t n);

} // namespace dimalg
