#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dimalg/errors.hpp"
#include "dimalg/extint.hpp"

namespace dimalg {

/// The indecomposable building blocks: Z, Q, Z/p^k, Z/p^inf, Z_(p).
/// The zero group is represented as the empty FiniteSumGroup, never as a tag.
enum class GroupTag : std::uint8_t { Z, Q, Cyclic, Prufer, Localized };

struct BasicGroup {
    GroupTag tag = GroupTag::Z;
    std::int64_t p = 0; // prime; 0 for Z, Q
    std::int64_t k = 0; // exponent; only Cyclic uses it

    friend bool operator==(const BasicGroup&, const BasicGroup&) = default;
};

bool operator<(const BasicGroup& a, const BasicGroup& b);

bool is_prime(std::int64_t n);

/// Factories; the prime-indexed ones validate p (and k >= 1) and throw
/// DomainError on a bad index.
BasicGroup group_z();
BasicGroup group_q();
BasicGroup group_cyclic(std::int64_t p, std::int64_t k);
BasicGroup group_prufer(std::int64_t p);
BasicGroup group_localized(std::int64_t p);

std::string to_string(const BasicGroup& g);

/// A finite direct sum of basic groups, kept as a sorted multiset.
/// Invariants: no zero summands; empty means the zero group.
class FiniteSumGroup {
public:
    FiniteSumGroup() = default;
    explicit FiniteSumGroup(std::vector<BasicGroup> summands);
    FiniteSumGroup(std::initializer_list<BasicGroup> summands);

    bool is_zero() const { return summands_.empty(); }
    const std::vector<BasicGroup>& summands() const { return summands_; }

    friend bool operator==(const FiniteSumGroup&, const FiniteSumGroup&) = default;

private:
    std::vector<BasicGroup> summands_;
};

FiniteSumGroup sum(const FiniteSumGroup& a, const FiniteSumGroup& b);

/// Pairwise products; both are bilinear over direct sum.
std::optional<BasicGroup> tensor_basic(const BasicGroup& a, const BasicGroup& b);
std::optional<BasicGroup> tor_basic(const BasicGroup& a, const BasicGroup& b);
FiniteSumGroup tensor(const FiniteSumGroup& a, const FiniteSumGroup& b);
FiniteSumGroup tor(const FiniteSumGroup& a, const FiniteSumGroup& b);

bool is_p_divisible(const BasicGroup& g, std::int64_t p);
bool is_p_divisible(const FiniteSumGroup& g, std::int64_t p);

FiniteSumGroup torsion_part(const FiniteSumGroup& g);
FiniteSumGroup torsion_free_quotient(const FiniteSumGroup& g);
FiniteSumGroup p_torsion(const FiniteSumGroup& g, std::int64_t p);

/// Primes indexing any summand of g, ascending.
std::vector<std::int64_t> primes_of(const FiniteSumGroup& g);

/// Smallest prime dividing no index of any of the given groups.
std::int64_t fresh_prime(const std::vector<const FiniteSumGroup*>& groups,
                         const std::vector<std::int64_t>& also_avoid = {});

/// The homological-dimension trichotomy of a pair:
///   0    if a (x) b != 0,
///   1    if a (x) b = 0 and Tor(a, b) != 0,
///   +inf if both vanish (in particular whenever either side is zero).
/// Symmetric in its arguments.
ExtInt dim_group(const FiniteSumGroup& a, const FiniteSumGroup& b);
ExtInt dim_group(const BasicGroup& a, const FiniteSumGroup& b);
ExtInt dim_group(const FiniteSumGroup& a, const BasicGroup& b);
ExtInt dim_group(const BasicGroup& a, const BasicGroup& b);

/// The four coefficient families every dimension pattern is indexed by:
/// Q and, per prime p, Z_(p), Z/p, Z/p^inf.
enum class BFamily : std::uint8_t { Q, Localized, Cyclic, Prufer };

struct BocksteinGroup {
    BFamily fam = BFamily::Q;
    std::int64_t p = 0; // unused for Q

    friend bool operator==(const BocksteinGroup&, const BocksteinGroup&) = default;
};

BasicGroup to_basic(const BocksteinGroup& h);
std::string to_string(const BocksteinGroup& h);

/// Membership flags for the three prime-indexed families at one prime,
/// in the fixed order (Z_(p), Z/p, Z/p^inf).
struct BasisTriple {
    bool loc = false;
    bool mod = false;
    bool pru = false;

    friend bool operator==(const BasisTriple&, const BasisTriple&) = default;
};

/// The Bockstein basis of a group: whether Q belongs, a default triple that
/// applies at every prime without an exception entry, and the finitely many
/// exceptional primes. Normalized: no exception equals the default.
class BocksteinBasisSet {
public:
    BocksteinBasisSet() = default;
    BocksteinBasisSet(bool has_q, BasisTriple def,
                      std::map<std::int64_t, BasisTriple> exceptions);

    bool has_q() const { return has_q_; }
    const BasisTriple& default_triple() const { return default_; }
    const std::map<std::int64_t, BasisTriple>& exceptions() const { return exceptions_; }

    const BasisTriple& triple_at(std::int64_t p) const;
    bool contains(const BocksteinGroup& h) const;

    /// True only for the basis of the zero group: no member at all.
    bool empty() const;

    friend bool operator==(const BocksteinBasisSet&, const BocksteinBasisSet&) = default;

private:
    bool has_q_ = false;
    BasisTriple default_{};
    std::map<std::int64_t, BasisTriple> exceptions_;
};

/// Membership criteria, per family:
///   Q       in sigma(G) iff G has a nonzero torsion-free quotient;
///   Z_(p)   in sigma(G) iff the torsion-free quotient is not p-divisible;
///   Z/p     in sigma(G) iff G is not p-divisible;
///   Z/p^inf in sigma(G) iff Z_(p) is in sigma(G) or the p-torsion is nonzero.
BocksteinBasisSet bockstein_basis(const FiniteSumGroup& g);

/// The same membership criteria evaluated directly on (g, h), bypassing the
/// assembled set; bockstein_basis(g).contains(h) must agree with this.
bool basis_contains_direct(const FiniteSumGroup& g, const BocksteinGroup& h);

/// Text forms: "0", "Z", "Q", "Z/9", "Z/3^inf", "Z_(3)", sums joined by " + ".
/// parse_group also accepts caret powers ("Z/3^2") and composite moduli
/// ("Z/12" splits into primary parts).
std::string to_string(const FiniteSumGroup& g);
FiniteSumGroup parse_group(const std::string& text);

} // namespace dimalg
