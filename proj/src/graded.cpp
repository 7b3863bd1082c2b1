#include "dimalg/graded.hpp"

#include <sstream>

#include "dimalg/errors.hpp"

namespace dimalg {

GradedGroup::GradedGroup(std::map<std::int64_t, FiniteSumGroup> terms)
    : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

const FiniteSumGroup& GradedGroup::at(std::int64_t degree) const {
    static const FiniteSumGroup zero;
    auto it = terms_.find(degree);
    return it == terms_.end() ? zero : it->second;
}

GradedGroup single(std::int64_t degree, const FiniteSumGroup& g) {
    std::map<std::int64_t, FiniteSumGroup> t;
    t.emplace(degree, g);
    return GradedGroup(std::move(t));
}

GradedGroup single(std::int64_t degree, const BasicGroup& g) {
    return single(degree, FiniteSumGroup{g});
}

GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b) {
    std::map<std::int64_t, FiniteSumGroup> t = a.terms();
    for (const auto& [deg, grp] : b.terms()) {
        auto it = t.find(deg);
        if (it == t.end())
            t.emplace(deg, grp);
        else
            it->second = sum(it->second, grp);
    }
    return GradedGroup(std::move(t));
}

GradedGroup smash(const GradedGroup& a, const GradedGroup& b) {
    std::map<std::int64_t, FiniteSumGroup> t;
    auto put = [&t](std::int64_t deg, const FiniteSumGroup& g) {
        if (g.is_zero()) return;
        auto it = t.find(deg);
        if (it == t.end())
            t.emplace(deg, g);
        else
            it->second = sum(it->second, g);
    };
    for (const auto& [da, ga] : a.terms())
        for (const auto& [db, gb] : b.terms()) {
            put(da + db, tensor(ga, gb));
            put(da + db + 1, tor(ga, gb));
        }
    return GradedGroup(std::move(t));
}

GradedGroup suspend(const GradedGroup& a, ExtInt k) {
    if (k.is_plus_inf()) return GradedGroup();
    if (k.is_minus_inf())
        throw DomainError("suspension by -inf is not defined");
    std::map<std::int64_t, FiniteSumGroup> t;
    for (const auto& [deg, grp] : a.terms()) t.emplace(deg + k.finite(), grp);
    return GradedGroup(std::move(t));
}

ExtInt cin(const GradedGroup& a) {
    if (a.is_zero()) return ExtInt::plus_inf();
    return a.terms().begin()->first;
}

ExtInt dim_coeff(const GradedGroup& a, const FiniteSumGroup& g) {
    return cin(smash(a, single(0, g)));
}

ExtInt dim_coeff(const GradedGroup& a, const BasicGroup& g) {
    return dim_coeff(a, FiniteSumGroup{g});
}

std::string to_string(const GradedGroup& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, grp] : a.terms()) {
        if (!first) os << " + ";
        os << "S^" << deg << "(" << to_string(grp) << ")";
        first = false;
    }
    return os.str();
}

} // namespace dimalg
