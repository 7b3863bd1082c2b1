#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "dimalg/abelian.hpp"
#include "dimalg/extint.hpp"

namespace dimalg {

/// A graded abelian group with finite support: finitely many degrees carry a
/// nonzero FiniteSumGroup. Normalized: no zero entries; empty map = 0.
class GradedGroup {
public:
    GradedGroup() = default;
    explicit GradedGroup(std::map<std::int64_t, FiniteSumGroup> terms);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::int64_t, FiniteSumGroup>& terms() const { return terms_; }

    /// The group in one degree (zero when unsupported).
    const FiniteSumGroup& at(std::int64_t degree) const;

    friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

private:
    std::map<std::int64_t, FiniteSumGroup> terms_;
};

/// Sigma^n(G): G concentrated in degree n.
GradedGroup single(std::int64_t degree, const FiniteSumGroup& g);
GradedGroup single(std::int64_t degree, const BasicGroup& g);

GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b);

/// Degreewise smash: (A ^ B)(n) = sum_k A(k) (x) B(n-k)  +  sum_k Tor(A(k), B(n-k-1)).
GradedGroup smash(const GradedGroup& a, const GradedGroup& b);

/// Shift by k: +inf yields the zero graded group, -inf is rejected.
GradedGroup suspend(const GradedGroup& a, ExtInt k);

/// Connectivity index: least supported degree, +inf for the zero group.
ExtInt cin(const GradedGroup& a);

/// Least degree in which A ^ Sigma^0(G) is nonzero, +inf if that smash
/// vanishes (in particular for G = 0).
ExtInt dim_coeff(const GradedGroup& a, const FiniteSumGroup& g);
ExtInt dim_coeff(const GradedGroup& a, const BasicGroup& g);

/// "0" or suspension literals joined by " + ", ascending degree:
/// "S^0(Q) + S^2(Z/3)".
std::string to_string(const GradedGroup& a);

} // namespace dimalg
