#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimalg/bockstein.hpp"
#include "dimalg/graded.hpp"

namespace dimalg {

/// The primes a concrete computation is carried out over, plus one generic
/// prime standing in for every prime outside the set. The generic prime must
/// not occur among `primes` or in any input's exceptions.
struct PrimeScope {
    std::vector<std::int64_t> primes;
    std::int64_t generic = 0;

    /// primes followed by the generic prime.
    std::vector<std::int64_t> all() const;
};

/// Scope over the given primes; generic = smallest prime not listed.
PrimeScope make_scope(std::vector<std::int64_t> primes);

/// Degreewise dimension data of a concrete graded group, read off by direct
/// computation: the value at H is dim_coeff(a, H). Exceptions at scope
/// primes, default from the generic prime.
DPattern d_function(const GradedGroup& a, const PrimeScope& scope);

/// The dimension envelope of a concrete nonzero graded group:
///   e(H) = sup over F of (dim_coeff(a, F) - dim_group(F, H)),
/// F ranging over {Z, Q} and {Z/p, Z/p^2, Z/p^inf, Z_(p)} for each scope
/// prime and the generic prime, restricted to F with dim_group(F, H) finite.
/// The result is validated; a zero graded group is rejected (DomainError).
BocksteinFunction e_function(const GradedGroup& a, const PrimeScope& scope);

/// One differing coordinate between two computation routes.
struct Divergence {
    std::optional<std::int64_t> prime; // empty: the generic slot (or Q if group=="Q")
    std::string group;                 // "Q", "Z_(p)", "Z/p", "Z/p^inf"
    std::string path_a_value;
    std::string path_b_value;
};

struct VerifyReport {
    std::string case_id;
    std::string path_a;
    std::string path_b;
    bool pass = false;
    std::optional<Divergence> first_divergence;
    std::string note; // set when a route failed outright (validation error)
};

/// Checks the closed-form smash against the concrete route
/// e_function(smash(gg_restrict(a), gg_restrict(b))) over the scope.
/// `flags` feed only the closed-form side.
VerifyReport verify_smash(const BocksteinFunction& a, const BocksteinFunction& b,
                          const PrimeScope& scope, const MutationFlags& flags = {},
                          const std::string& case_id = "smash");

/// Checks the closed-form dual: smash(dual(a), a) must be >= 0 in every
/// coordinate, and dual(a) must be <= every candidate g with
/// smash(g, a) >= 0. The candidate list always includes the concretely
/// constructed minimal complement (via d_function of gg_restrict(a)), which
/// pins the dual exactly; extra_candidates add random probes.
VerifyReport verify_dual(const BocksteinFunction& a, const PrimeScope& scope,
                         const std::vector<BocksteinFunction>& extra_candidates,
                         const MutationFlags& flags = {},
                         const std::string& case_id = "dual");

/// Checks gg_d_function against d_function(gg_restrict(a)) over the scope.
VerifyReport verify_d_conversion(const BocksteinFunction& a, const PrimeScope& scope,
                                 const MutationFlags& flags = {},
                                 const std::string& case_id = "dconv");

} // namespace dimalg
