#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dimalg/abelian.hpp"
#include "dimalg/bockstein.hpp"
#include "dimalg/dimtheory.hpp"
#include "dimalg/graded.hpp"

namespace dimalg::cli {

/// Expression-level kinds. Basis and Moore are terminal: printable results
/// that no operator accepts as an operand.
enum class Kind { Int, Bool, Group, Graded, EFun, DFun, Profile, Basis, Moore };

std::string kind_name(Kind k);

struct Value {
    std::variant<ExtInt, bool, FiniteSumGroup, GradedGroup, BocksteinFunction, DPattern,
                 CompactumProfile, BocksteinBasisSet, MooreSpaceSpec>
        v;

    Kind kind() const;
    friend bool operator==(const Value&, const Value&) = default;
};

std::string to_text(const Value& val);
nlohmann::json to_json_value(const Value& val);

/// Expression AST.
///
/// Precedence, tightest first: dual (postfix *), suspension S^k(...),
/// smash ^, sum-product [+], direct sum +, equality ==.
struct Expr {
    enum class Op {
        IntLit,     // number (ExtInt literal, infinities included)
        GroupLit,   // group literal, e.g. Z/9
        PatternLit, // efun{...} / dfun{...} / profile{...}
        Ident,      // bound name
        Sum,        // a + b
        SumProd,    // a [+] b
        Smash,      // a ^ b
        Eq,         // a == b
        Dual,       // dual(a) or a*
        Suspend,    // S^k(a)
        Call        // name(args...); dim uses (expr; coeff=expr)
    };

    Op op;
    ExtInt number;            // IntLit value, Suspend amount
    FiniteSumGroup group;     // GroupLit
    PrimePattern pattern;     // PatternLit
    int pattern_kind = 0;     // 0 efun, 1 dfun, 2 profile
    std::string name;         // Ident / Call
    std::vector<std::unique_ptr<Expr>> args;
};

/// Throws ParseError with line/column on malformed input.
std::unique_ptr<Expr> parse_expression(const std::string& text);

/// Canonical form; parsing it back yields an identically-printing tree.
std::string print_expression(const Expr& e);

using Env = std::map<std::string, Value>;

/// Kind-checks and computes. KindError for operator/operand mismatches,
/// DomainError family for valid-shaped but out-of-domain operations; both
/// carry the subexpression path they arose in.
Value evaluate(const Expr& e, const Env& env);

/// Names with grammar meaning; bindings must avoid them.
bool is_reserved_word(const std::string& name);

} // namespace dimalg::cli
