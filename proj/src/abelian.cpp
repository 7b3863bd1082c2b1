#include "dimalg/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

namespace dimalg {

namespace {

int tag_rank(GroupTag t) {
    switch (t) {
    case GroupTag::Z: return 0;
    case GroupTag::Q: return 1;
    case GroupTag::Cyclic: return 2;
    case GroupTag::Prufer: return 3;
    case GroupTag::Localized: return 4;
    }
    return 5;
}

void require_prime(std::int64_t p) {
    if (!is_prime(p))
        throw DomainError("prime index required, got " + std::to_string(p));
}

} // namespace

bool operator<(const BasicGroup& a, const BasicGroup& b) {
    return std::tuple(tag_rank(a.tag), a.p, a.k) < std::tuple(tag_rank(b.tag), b.p, b.k);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

BasicGroup group_z() { return BasicGroup{GroupTag::Z, 0, 0}; }
BasicGroup group_q() { return BasicGroup{GroupTag::Q, 0, 0}; }

BasicGroup group_cyclic(std::int64_t p, std::int64_t k) {
    require_prime(p);
    if (k < 1) throw DomainError("cyclic exponent must be >= 1, got " + std::to_string(k));
    return BasicGroup{GroupTag::Cyclic, p, k};
}

BasicGroup group_prufer(std::int64_t p) {
    require_prime(p);
    return BasicGroup{GroupTag::Prufer, p, 0};
}

BasicGroup group_localized(std::int64_t p) {
    require_prime(p);
    return BasicGroup{GroupTag::Localized, p, 0};
}

std::string to_string(const BasicGroup& g) {
    switch (g.tag) {
    case GroupTag::Z: return "Z";
    case GroupTag::Q: return "Q";
    case GroupTag::Cyclic: {
        // Numeric modulus when it fits, caret form otherwise.
        std::int64_t n = 1;
        bool overflow = false;
        for (std::int64_t i = 0; i < g.k; ++i) {
            if (n > (std::int64_t{1} << 62) / g.p) {
                overflow = true;
                break;
            }
            n *= g.p;
        }
        if (overflow)
            return "Z/" + std::to_string(g.p) + "^" + std::to_string(g.k);
        return "Z/" + std::to_string(n);
    }
    case GroupTag::Prufer: return "Z/" + std::to_string(g.p) + "^inf";
    case GroupTag::Localized: return "Z_(" + std::to_string(g.p) + ")";
    }
    return "?";
}

FiniteSumGroup::FiniteSumGroup(std::vector<BasicGroup> summands)
    : summands_(std::move(summands)) {
    std::sort(summands_.begin(), summands_.end());
}

FiniteSumGroup::FiniteSumGroup(std::initializer_list<BasicGroup> summands)
    : FiniteSumGroup(std::vector<BasicGroup>(summands)) {}

FiniteSumGroup sum(const FiniteSumGroup& a, const FiniteSumGroup& b) {
    std::vector<BasicGroup> s = a.summands();
    s.insert(s.end(), b.summands().begin(), b.summands().end());
    return FiniteSumGroup(std::move(s));
}

std::optional<BasicGroup> tensor_basic(const BasicGroup& a, const BasicGroup& b) {
    // Z is the unit.
    if (a.tag == GroupTag::Z) return b;
    if (b.tag == GroupTag::Z) return a;
    const BasicGroup& x = std::min(a, b);
    const BasicGroup& y = std::max(a, b);
    // Below, x's tag rank <= y's: Q < Cyclic < Prufer < Localized.
    switch (x.tag) {
    case GroupTag::Q:
        switch (y.tag) {
        case GroupTag::Q: return group_q();
        case GroupTag::Cyclic:
        case GroupTag::Prufer: return std::nullopt;
        case GroupTag::Localized: return group_q();
        default: break;
        }
        break;
    case GroupTag::Cyclic:
        switch (y.tag) {
        case GroupTag::Cyclic:
            if (x.p != y.p) return std::nullopt;
            return group_cyclic(x.p, std::min(x.k, y.k));
        case GroupTag::Prufer: return std::nullopt; // divisible kills bounded torsion
        case GroupTag::Localized:
            return x.p == y.p ? std::optional<BasicGroup>(x) : std::nullopt;
        default: break;
        }
        break;
    case GroupTag::Prufer:
        switch (y.tag) {
        case GroupTag::Prufer: return std::nullopt;
        case GroupTag::Localized:
            return x.p == y.p ? std::optional<BasicGroup>(x) : std::nullopt;
        default: break;
        }
        break;
    case GroupTag::Localized:
        // y is Localized too.
        if (x.p == y.p) return x;
        return group_q();
    default: break;
    }
    throw InternalError("tensor_basic: unhandled pair " + to_string(a) + ", " + to_string(b));
}

std::optional<BasicGroup> tor_basic(const BasicGroup& a, const BasicGroup& b) {
    auto torsion_free = [](const BasicGroup& g) {
        return g.tag == GroupTag::Z || g.tag == GroupTag::Q || g.tag == GroupTag::Localized;
    };
    if (torsion_free(a) || torsion_free(b)) return std::nullopt;
    if (a.p != b.p) return std::nullopt;
    if (a.tag == GroupTag::Cyclic && b.tag == GroupTag::Cyclic)
        return group_cyclic(a.p, std::min(a.k, b.k));
    if (a.tag == GroupTag::Prufer && b.tag == GroupTag::Prufer)
        return group_prufer(a.p);
    // One cyclic, one Prufer at the same prime: the cyclic side survives.
    const BasicGroup& cyc = a.tag == GroupTag::Cyclic ? a : b;
    return cyc;
}

namespace {

FiniteSumGroup bilinear(const FiniteSumGroup& a, const FiniteSumGroup& b,
                        std::optional<BasicGroup> (*f)(const BasicGroup&, const BasicGroup&)) {
    std::vector<BasicGroup> out;
    for (const BasicGroup& x : a.summands())
        for (const BasicGroup& y : b.summands())
            if (auto g = f(x, y)) out.push_back(*g);
    return FiniteSumGroup(std::move(out));
}

} // namespace

FiniteSumGroup tensor(const FiniteSumGroup& a, const FiniteSumGroup& b) {
    return bilinear(a, b, &tensor_basic);
}

FiniteSumGroup tor(const FiniteSumGroup& a, const FiniteSumGroup& b) {
    return bilinear(a, b, &tor_basic);
}

bool is_p_divisible(const BasicGroup& g, std::int64_t p) {
    switch (g.tag) {
    case GroupTag::Z: return false;
    case GroupTag::Q: return true;
    case GroupTag::Cyclic: return g.p != p;
    case GroupTag::Prufer: return true;
    case GroupTag::Localized: return g.p != p;
    }
    return false;
}

bool is_p_divisible(const FiniteSumGroup& g, std::int64_t p) {
    for (const BasicGroup& s : g.summands())
        if (!is_p_divisible(s, p)) return false;
    return true;
}

namespace {

FiniteSumGroup filter(const FiniteSumGroup& g, bool (*keep)(const BasicGroup&)) {
    std::vector<BasicGroup> out;
    for (const BasicGroup& s : g.summands())
        if (keep(s)) out.push_back(s);
    return FiniteSumGroup(std::move(out));
}

} // namespace

FiniteSumGroup torsion_part(const FiniteSumGroup& g) {
    return filter(g, [](const BasicGroup& s) {
        return s.tag == GroupTag::Cyclic || s.tag == GroupTag::Prufer;
    });
}

FiniteSumGroup torsion_free_quotient(const FiniteSumGroup& g) {
    return filter(g, [](const BasicGroup& s) {
        return s.tag == GroupTag::Z || s.tag == GroupTag::Q || s.tag == GroupTag::Localized;
    });
}

FiniteSumGroup p_torsion(const FiniteSumGroup& g, std::int64_t p) {
    std::vector<BasicGroup> out;
    for (const BasicGroup& s : g.summands())
        if ((s.tag == GroupTag::Cyclic || s.tag == GroupTag::Prufer) && s.p == p)
            out.push_back(s);
    return FiniteSumGroup(std::move(out));
}

std::vector<std::int64_t> primes_of(const FiniteSumGroup& g) {
    std::set<std::int64_t> ps;
    for (const BasicGroup& s : g.summands())
        if (s.p != 0) ps.insert(s.p);
    return {ps.begin(), ps.end()};
}

std::int64_t fresh_prime(const std::vector<const FiniteSumGroup*>& groups,
                         const std::vector<std::int64_t>& also_avoid) {
    std::set<std::int64_t> used(also_avoid.begin(), also_avoid.end());
    for (const FiniteSumGroup* g : groups)
        for (std::int64_t p : primes_of(*g)) used.insert(p);
    for (std::int64_t p = 2;; ++p)
        if (is_prime(p) && !used.count(p)) return p;
}

ExtInt dim_group(const FiniteSumGroup& a, const FiniteSumGroup& b) {
    if (!tensor(a, b).is_zero()) return 0;
    if (!tor(a, b).is_zero()) return 1;
    return ExtInt::plus_inf();
}

ExtInt dim_group(const BasicGroup& a, const FiniteSumGroup& b) {
    return dim_group(FiniteSumGroup{a}, b);
}

ExtInt dim_group(const FiniteSumGroup& a, const BasicGroup& b) {
    return dim_group(a, FiniteSumGroup{b});
}

ExtInt dim_group(const BasicGroup& a, const BasicGroup& b) {
    return dim_group(FiniteSumGroup{a}, FiniteSumGroup{b});
}

BasicGroup to_basic(const BocksteinGroup& h) {
    switch (h.fam) {
    case BFamily::Q: return group_q();
    case BFamily::Localized: return group_localized(h.p);
    case BFamily::Cyclic: return group_cyclic(h.p, 1);
    case BFamily::Prufer: return group_prufer(h.p);
    }
    throw InternalError("to_basic: bad family");
}

std::string to_string(const BocksteinGroup& h) { return to_string(to_basic(h)); }

BocksteinBasisSet::BocksteinBasisSet(bool has_q, BasisTriple def,
                                     std::map<std::int64_t, BasisTriple> exceptions)
    : has_q_(has_q), default_(def), exceptions_(std::move(exceptions)) {
    for (auto it = exceptions_.begin(); it != exceptions_.end();) {
        if (!is_prime(it->first))
            throw DomainError("basis exception at non-prime " + std::to_string(it->first));
        if (it->second == default_)
            it = exceptions_.erase(it);
        else
            ++it;
    }
}

const BasisTriple& BocksteinBasisSet::triple_at(std::int64_t p) const {
    auto it = exceptions_.find(p);
    return it == exceptions_.end() ? default_ : it->second;
}

bool BocksteinBasisSet::contains(const BocksteinGroup& h) const {
    if (h.fam == BFamily::Q) return has_q_;
    const BasisTriple& t = triple_at(h.p);
    switch (h.fam) {
    case BFamily::Localized: return t.loc;
    case BFamily::Cyclic: return t.mod;
    case BFamily::Prufer: return t.pru;
    default: break;
    }
    return false;
}

bool BocksteinBasisSet::empty() const {
    return !has_q_ && default_ == BasisTriple{} && exceptions_.empty();
}

BocksteinBasisSet bockstein_basis(const FiniteSumGroup& g) {
    FiniteSumGroup free_part = torsion_free_quotient(g);
    bool has_q = !free_part.is_zero();
    // At a prime dividing no summand index, each criterion reduces to
    // "g has a Z summand".
    bool has_z = false;
    for (const BasicGroup& s : g.summands())
        if (s.tag == GroupTag::Z) has_z = true;
    BasisTriple def{has_z, has_z, has_z};
    std::map<std::int64_t, BasisTriple> exc;
    for (std::int64_t p : primes_of(g)) {
        BasisTriple t;
        t.loc = !is_p_divisible(free_part, p);
        t.mod = !is_p_divisible(g, p);
        t.pru = t.loc || !p_torsion(g, p).is_zero();
        exc.emplace(p, t);
    }
    return BocksteinBasisSet(has_q, def, std::move(exc));
}

bool basis_contains_direct(const FiniteSumGroup& g, const BocksteinGroup& h) {
    switch (h.fam) {
    case BFamily::Q: return !torsion_free_quotient(g).is_zero();
    case BFamily::Localized: return !is_p_divisible(torsion_free_quotient(g), h.p);
    case BFamily::Cyclic: return !is_p_divisible(g, h.p);
    case BFamily::Prufer:
        return !is_p_divisible(torsion_free_quotient(g), h.p) ||
               !p_torsion(g, h.p).is_zero();
    }
    return false;
}

std::string to_string(const FiniteSumGroup& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const BasicGroup& s : g.summands()) {
        if (!first) os << " + ";
        os << to_string(s);
        first = false;
    }
    return os.str();
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw ParseError("bad " + what + ": '" + s + "'");
    try {
        return std::stoll(s);
    } catch (const std::exception&) {
        throw ParseError(what + " out of range: '" + s + "'");
    }
}

// Primary decomposition of Z/n for n >= 1; n = 1 contributes nothing.
void append_cyclic_parts(std::int64_t n, std::vector<BasicGroup>& out) {
    if (n < 1) throw ParseError("cyclic modulus must be >= 1, got " + std::to_string(n));
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        std::int64_t k = 0;
        while (n % d == 0) {
            n /= d;
            ++k;
        }
        out.push_back(group_cyclic(d, k));
    }
    if (n > 1) out.push_back(group_cyclic(n, 1));
}

void parse_one_group(const std::string& tok, std::vector<BasicGroup>& out) {
    if (tok == "0") return;
    if (tok == "Z") {
        out.push_back(group_z());
        return;
    }
    if (tok == "Q") {
        out.push_back(group_q());
        return;
    }
    if (tok.rfind("Z_(", 0) == 0 && tok.size() > 4 && tok.back() == ')') {
        std::int64_t p = parse_int(tok.substr(3, tok.size() - 4), "localization prime");
        out.push_back(group_localized(p));
        return;
    }
    if (tok.rfind("Z/", 0) == 0) {
        std::string body = tok.substr(2);
        std::size_t caret = body.find('^');
        if (caret == std::string::npos) {
            append_cyclic_parts(parse_int(body, "cyclic modulus"), out);
            return;
        }
        std::int64_t p = parse_int(body.substr(0, caret), "prime");
        std::string expo = body.substr(caret + 1);
        std::string lowered;
        for (char c : expo) lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (lowered == "inf") {
            out.push_back(group_prufer(p));
            return;
        }
        out.push_back(group_cyclic(p, parse_int(expo, "cyclic exponent")));
        return;
    }
    throw ParseError("unrecognized group literal: '" + tok + "'");
}

} // namespace

FiniteSumGroup parse_group(const std::string& text) {
    std::vector<BasicGroup> out;
    std::size_t pos = 0;
    bool any = false;
    while (pos <= text.size()) {
        std::size_t plus = text.find('+', pos);
        std::string tok = strip(plus == std::string::npos ? text.substr(pos)
                                                          : text.substr(pos, plus - pos));
        if (tok.empty()) throw ParseError("empty summand in group literal: '" + text + "'");
        try {
            parse_one_group(tok, out);
        } catch (const DomainError& e) {
            throw ParseError(std::string(e.what()) + " in group literal '" + text + "'");
        }
        any = true;
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    if (!any) throw ParseError("empty group literal");
    return FiniteSumGroup(std::move(out));
}

} // namespace dimalg
