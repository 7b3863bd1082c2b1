#include "dimalg/expr.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <string_view>

#include "dimalg/json_io.hpp"

namespace dimalg::cli {

namespace {

// ---------------------------------------------------------------- lexer ----

struct Token {
    enum class T {
        End, Int, Inf, Ident, Plus, Caret, Star, Slash, LParen, RParen,
        LBrace, RBrace, Comma, Semi, Colon, Assign, EqEq, SumProd
    };
    T t = T::End;
    std::int64_t ival = 0;
    bool negative = false; // for Inf
    std::string text;
    int line = 1;
    int col = 1;
};

const char* token_name(Token::T t) {
    switch (t) {
    case Token::T::End: return "end of input";
    case Token::T::Int: return "integer";
    case Token::T::Inf: return "inf";
    case Token::T::Ident: return "identifier";
    case Token::T::Plus: return "'+'";
    case Token::T::Caret: return "'^'";
    case Token::T::Star: return "'*'";
    case Token::T::Slash: return "'/'";
    case Token::T::LParen: return "'('";
    case Token::T::RParen: return "')'";
    case Token::T::LBrace: return "'{'";
    case Token::T::RBrace: return "'}'";
    case Token::T::Comma: return "','";
    case Token::T::Semi: return "';'";
    case Token::T::Colon: return "':'";
    case Token::T::Assign: return "'='";
    case Token::T::EqEq: return "'=='";
    case Token::T::SumProd: return "'[+]'";
    }
    return "?";
}

[[noreturn]] void fail_at(int line, int col, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                     msg);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    auto read_int = [&](bool negative) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        Token t;
        t.t = Token::T::Int;
        t.line = line;
        t.col = col;
        try {
            t.ival = std::stoll(text.substr(i, j - i));
        } catch (const std::exception&) {
            fail_at(line, col, "integer literal out of range");
        }
        if (negative) t.ival = -t.ival;
        advance(j - i);
        out.push_back(t);
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            read_int(false);
            continue;
        }
        if (c == '-') {
            if (i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                advance(1);
                read_int(true);
                // read_int pushed with the post-'-' position; fix to include sign.
                out.back().col = t.col;
                continue;
            }
            if (i + 1 < text.size() && ident_start(text[i + 1])) {
                std::size_t j = i + 1;
                while (j < text.size() && ident_char(text[j])) ++j;
                std::string word = text.substr(i + 1, j - i - 1);
                std::string lower;
                for (char w : word)
                    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(w))));
                if (lower == "inf" || lower == "infinity") {
                    t.t = Token::T::Inf;
                    t.negative = true;
                    advance(j - i);
                    out.push_back(t);
                    continue;
                }
            }
            fail_at(line, col, "unexpected '-'");
        }
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            std::string word = text.substr(i, j - i);
            std::string lower;
            for (char w : word)
                lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(w))));
            if (lower == "inf" || lower == "infinity") {
                t.t = Token::T::Inf;
                t.negative = false;
            } else {
                t.t = Token::T::Ident;
                t.text = word;
            }
            advance(j - i);
            out.push_back(t);
            continue;
        }
        switch (c) {
        case '+': t.t = Token::T::Plus; break;
        case '^': t.t = Token::T::Caret; break;
        case '*': t.t = Token::T::Star; break;
        case '/': t.t = Token::T::Slash; break;
        case '(': t.t = Token::T::LParen; break;
        case ')': t.t = Token::T::RParen; break;
        case '{': t.t = Token::T::LBrace; break;
        case '}': t.t = Token::T::RBrace; break;
        case ',': t.t = Token::T::Comma; break;
        case ';': t.t = Token::T::Semi; break;
        case ':': t.t = Token::T::Colon; break;
        case '=':
            if (i + 1 < text.size() && text[i + 1] == '=') {
                t.t = Token::T::EqEq;
                advance(2);
                out.push_back(t);
                continue;
            }
            t.t = Token::T::Assign;
            break;
        case '[':
            if (i + 2 < text.size() && text[i + 1] == '+' && text[i + 2] == ']') {
                t.t = Token::T::SumProd;
                advance(3);
                out.push_back(t);
                continue;
            }
            fail_at(line, col, "expected '[+]'");
        default:
            fail_at(line, col, std::string("unexpected character '") + c + "'");
        }
        advance(1);
        out.push_back(t);
    }
    Token end;
    end.t = Token::T::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

// --------------------------------------------------------------- parser ----

const std::set<std::string>& builtin_names() {
    static const std::set<std::string> names{"dual",  "min",   "max",       "leq",
                                             "dim",   "cin",   "sigma",     "testspace",
                                             "moore", "sp_ae", "dpattern"};
    return names;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    std::unique_ptr<Expr> run() {
        std::unique_ptr<Expr> e = parse_top();
        expect(Token::T::End, "end of expression");
        return e;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(std::size_t n = 1) const {
        return toks_[std::min(pos_ + n, toks_.size() - 1)];
    }
    Token take() { return toks_[pos_++]; }

    Token expect(Token::T t, const std::string& what) {
        if (cur().t != t)
            fail_at(cur().line, cur().col,
                    "expected " + what + ", found " + token_name(cur().t));
        return take();
    }

    static std::unique_ptr<Expr> node(Expr::Op op) {
        auto e = std::make_unique<Expr>();
        e->op = op;
        return e;
    }

    static std::unique_ptr<Expr> binary(Expr::Op op, std::unique_ptr<Expr> a,
                                        std::unique_ptr<Expr> b) {
        auto e = node(op);
        e->args.push_back(std::move(a));
        e->args.push_back(std::move(b));
        return e;
    }

    std::unique_ptr<Expr> parse_top() {
        std::unique_ptr<Expr> e = parse_sum();
        if (cur().t == Token::T::EqEq) {
            take();
            e = binary(Expr::Op::Eq, std::move(e), parse_sum());
        }
        return e;
    }

    std::unique_ptr<Expr> parse_sum() {
        std::unique_ptr<Expr> e = parse_sumprod();
        while (cur().t == Token::T::Plus) {
            take();
            e = binary(Expr::Op::Sum, std::move(e), parse_sumprod());
        }
        return e;
    }

    std::unique_ptr<Expr> parse_sumprod() {
        std::unique_ptr<Expr> e = parse_smash();
        while (cur().t == Token::T::SumProd) {
            take();
            e = binary(Expr::Op::SumProd, std::move(e), parse_smash());
        }
        return e;
    }

    std::unique_ptr<Expr> parse_smash() {
        std::unique_ptr<Expr> e = parse_postfix();
        while (cur().t == Token::T::Caret) {
            take();
            e = binary(Expr::Op::Smash, std::move(e), parse_postfix());
        }
        return e;
    }

    std::unique_ptr<Expr> parse_postfix() {
        std::unique_ptr<Expr> e = parse_primary();
        while (cur().t == Token::T::Star) {
            take();
            auto d = node(Expr::Op::Dual);
            d->args.push_back(std::move(e));
            e = std::move(d);
        }
        return e;
    }

    ExtInt take_extint() {
        if (cur().t == Token::T::Int) return ExtInt(take().ival);
        if (cur().t == Token::T::Inf) {
            Token t = take();
            return t.negative ? ExtInt::minus_inf() : ExtInt::plus_inf();
        }
        fail_at(cur().line, cur().col,
                std::string("expected integer or inf, found ") + token_name(cur().t));
    }

    std::unique_ptr<Expr> group_node(const Token& at, const std::string& literal) {
        auto e = node(Expr::Op::GroupLit);
        try {
            e->group = parse_group(literal);
        } catch (const ParseError& err) {
            fail_at(at.line, at.col, err.what());
        }
        return e;
    }

    // Z, Z/9, Z/3^2, Z/3^inf, with '^' claimed only when an exponent follows.
    std::unique_ptr<Expr> parse_z_literal(const Token& at) {
        if (cur().t != Token::T::Slash) return group_node(at, "Z");
        take();
        Token num = expect(Token::T::Int, "modulus after 'Z/'");
        if (num.ival < 1) fail_at(num.line, num.col, "modulus must be >= 1");
        if (cur().t == Token::T::Caret &&
            (peek().t == Token::T::Int || peek().t == Token::T::Inf)) {
            take();
            if (cur().t == Token::T::Inf) {
                Token inf = take();
                if (inf.negative) fail_at(inf.line, inf.col, "exponent must be positive");
                return group_node(at, "Z/" + std::to_string(num.ival) + "^inf");
            }
            Token expo = take();
            if (expo.ival < 1) fail_at(expo.line, expo.col, "exponent must be >= 1");
            return group_node(at,
                              "Z/" + std::to_string(num.ival) + "^" + std::to_string(expo.ival));
        }
        return group_node(at, "Z/" + std::to_string(num.ival));
    }

    PrimeTriple parse_triple() {
        expect(Token::T::LParen, "'('");
        PrimeTriple t;
        t.loc = take_extint();
        expect(Token::T::Comma, "','");
        t.mod = take_extint();
        expect(Token::T::Comma, "','");
        t.pru = take_extint();
        expect(Token::T::RParen, "')'");
        return t;
    }

    std::unique_ptr<Expr> parse_pattern_literal(const std::string& keyword) {
        expect(Token::T::LBrace, "'{'");
        auto e = node(Expr::Op::PatternLit);
        e->pattern_kind = keyword == "efun" ? 0 : keyword == "dfun" ? 1 : 2;
        bool saw_q = false, saw_default = false;
        bool first = true;
        while (cur().t != Token::T::RBrace) {
            if (!first) expect(Token::T::Comma, "','");
            first = false;
            if (cur().t == Token::T::Ident && cur().text == "q") {
                take();
                expect(Token::T::Colon, "':'");
                e->pattern.q = take_extint();
                saw_q = true;
            } else if (cur().t == Token::T::Ident && cur().text == "default") {
                take();
                expect(Token::T::Colon, "':'");
                e->pattern.def = parse_triple();
                saw_default = true;
            } else if (cur().t == Token::T::Int) {
                Token p = take();
                if (!is_prime(p.ival))
                    fail_at(p.line, p.col, "exception key must be prime");
                expect(Token::T::Colon, "':'");
                e->pattern.exc[p.ival] = parse_triple();
            } else {
                fail_at(cur().line, cur().col,
                        std::string("expected 'q', 'default' or a prime, found ") +
                            token_name(cur().t));
            }
        }
        Token close = take();
        if (!saw_q || !saw_default)
            fail_at(close.line, close.col,
                    "pattern literal needs both 'q' and 'default' entries");
        e->pattern.normalize();
        return e;
    }

    std::unique_ptr<Expr> parse_call(const std::string& name) {
        expect(Token::T::LParen, "'('");
        auto e = node(Expr::Op::Call);
        e->name = name;
        if (name == "dim") {
            e->args.push_back(parse_top());
            expect(Token::T::Semi, "';' between the space and coeff=");
            Token kw = expect(Token::T::Ident, "'coeff'");
            if (kw.text != "coeff") fail_at(kw.line, kw.col, "expected 'coeff'");
            expect(Token::T::Assign, "'='");
            e->args.push_back(parse_top());
        } else {
            if (cur().t != Token::T::RParen) {
                e->args.push_back(parse_top());
                while (cur().t == Token::T::Comma) {
                    take();
                    e->args.push_back(parse_top());
                }
            }
            static const std::map<std::string, std::size_t> arity{
                {"dual", 1},  {"min", 2},   {"max", 2},       {"leq", 2},
                {"cin", 1},   {"sigma", 1}, {"testspace", 2}, {"moore", 1},
                {"sp_ae", 2}, {"dpattern", 1}};
            std::size_t want = arity.at(name);
            if (e->args.size() != want)
                fail_at(cur().line, cur().col,
                        name + " takes " + std::to_string(want) + " argument(s), got " +
                            std::to_string(e->args.size()));
        }
        expect(Token::T::RParen, "')'");
        if (e->name == "dual") {
            auto d = node(Expr::Op::Dual);
            d->args.push_back(std::move(e->args[0]));
            return d;
        }
        return e;
    }

    std::unique_ptr<Expr> parse_primary() {
        if (cur().t == Token::T::Int || cur().t == Token::T::Inf) {
            auto e = node(Expr::Op::IntLit);
            e->number = take_extint();
            return e;
        }
        if (cur().t == Token::T::LParen) {
            take();
            std::unique_ptr<Expr> e = parse_top();
            expect(Token::T::RParen, "')'");
            return e;
        }
        if (cur().t == Token::T::Ident) {
            Token id = take();
            if (id.text == "S" && cur().t == Token::T::Caret) {
                take();
                auto e = node(Expr::Op::Suspend);
                e->number = take_extint();
                expect(Token::T::LParen, "'(' after S^k");
                e->args.push_back(parse_top());
                expect(Token::T::RParen, "')'");
                return e;
            }
            if (id.text == "Z") return parse_z_literal(id);
            if (id.text == "Q") return group_node(id, "Q");
            if (id.text == "Z_" && cur().t == Token::T::LParen) {
                take();
                Token p = expect(Token::T::Int, "prime after 'Z_('");
                expect(Token::T::RParen, "')'");
                return group_node(id, "Z_(" + std::to_string(p.ival) + ")");
            }
            if ((id.text == "efun" || id.text == "dfun" || id.text == "profile") &&
                cur().t == Token::T::LBrace)
                return parse_pattern_literal(id.text);
            if (builtin_names().count(id.text)) return parse_call(id.text);
            auto e = node(Expr::Op::Ident);
            e->name = id.text;
            return e;
        }
        fail_at(cur().line, cur().col,
                std::string("expected an expression, found ") + token_name(cur().t));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// -------------------------------------------------------------- printer ----

// Precedence for parenthesization; larger binds tighter.
int precedence(const Expr& e) {
    switch (e.op) {
    case Expr::Op::Eq: return 0;
    case Expr::Op::Sum: return 1;
    case Expr::Op::SumProd: return 2;
    case Expr::Op::Smash: return 3;
    case Expr::Op::GroupLit: return e.group.summands().size() > 1 ? 1 : 6;
    default: return 6;
    }
}

void print_into(const Expr& e, std::ostream& os, int min_prec);

void print_child(const Expr& child, std::ostream& os, int min_prec) {
    bool parens = precedence(child) < min_prec;
    if (parens) os << "(";
    print_into(child, os, 0);
    if (parens) os << ")";
}

void print_into(const Expr& e, std::ostream& os, int) {
    switch (e.op) {
    case Expr::Op::IntLit: os << to_string(e.number); return;
    case Expr::Op::GroupLit: os << to_string(e.group); return;
    case Expr::Op::PatternLit: {
        const char* kw = e.pattern_kind == 0 ? "efun" : e.pattern_kind == 1 ? "dfun" : "profile";
        os << kw << "{q: " << to_string(e.pattern.q)
           << ", default: " << to_string(e.pattern.def);
        for (const auto& [p, t] : e.pattern.exc) os << ", " << p << ": " << to_string(t);
        os << "}";
        return;
    }
    case Expr::Op::Ident: os << e.name; return;
    case Expr::Op::Sum:
        print_child(*e.args[0], os, 1);
        os << " + ";
        print_child(*e.args[1], os, 2);
        return;
    case Expr::Op::SumProd:
        print_child(*e.args[0], os, 2);
        os << " [+] ";
        print_child(*e.args[1], os, 3);
        return;
    case Expr::Op::Smash:
        print_child(*e.args[0], os, 3);
        os << " ^ ";
        print_child(*e.args[1], os, 4);
        return;
    case Expr::Op::Eq:
        print_child(*e.args[0], os, 1);
        os << " == ";
        print_child(*e.args[1], os, 1);
        return;
    case Expr::Op::Dual:
        os << "dual(";
        print_into(*e.args[0], os, 0);
        os << ")";
        return;
    case Expr::Op::Suspend:
        os << "S^" << to_string(e.number) << "(";
        print_into(*e.args[0], os, 0);
        os << ")";
        return;
    case Expr::Op::Call:
        os << e.name << "(";
        if (e.name == "dim") {
            print_into(*e.args[0], os, 0);
            os << "; coeff=";
            print_into(*e.args[1], os, 0);
        } else {
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (i) os << ", ";
                print_into(*e.args[i], os, 0);
            }
        }
        os << ")";
        return;
    }
    throw InternalError("print_into: unhandled node");
}

// ------------------------------------------------------------ evaluator ----

[[noreturn]] void kind_fail(const std::string& what, const Value& a) {
    throw KindError(what + " cannot take " + kind_name(a.kind()));
}

[[noreturn]] void kind_fail2(const std::string& what, const Value& a, const Value& b) {
    throw KindError(what + " cannot combine " + kind_name(a.kind()) + " and " +
                    kind_name(b.kind()));
}

bool is_zero_int(const Value& v) {
    return v.kind() == Kind::Int && std::get<ExtInt>(v.v) == ExtInt{0};
}

bool gradedish(const Value& v) {
    return v.kind() == Kind::Graded || v.kind() == Kind::Group || is_zero_int(v);
}

GradedGroup as_graded(const Value& v) {
    if (v.kind() == Kind::Graded) return std::get<GradedGroup>(v.v);
    if (v.kind() == Kind::Group) return single(0, std::get<FiniteSumGroup>(v.v));
    if (is_zero_int(v)) return GradedGroup();
    kind_fail("graded-group position", v);
}

FiniteSumGroup as_group(const Value& v) {
    if (v.kind() == Kind::Group) return std::get<FiniteSumGroup>(v.v);
    if (is_zero_int(v)) return FiniteSumGroup();
    kind_fail("group position", v);
}

PrimePattern pattern_min(const PrimePattern& a, const PrimePattern& b) {
    auto tri_min = [](const PrimeTriple& x, const PrimeTriple& y) {
        return PrimeTriple{min(x.loc, y.loc), min(x.mod, y.mod), min(x.pru, y.pru)};
    };
    PrimePattern r;
    r.q = min(a.q, b.q);
    r.def = tri_min(a.def, b.def);
    for (std::int64_t p : merged_primes(a, b))
        r.exc.emplace(p, tri_min(a.triple_at(p), b.triple_at(p)));
    r.normalize();
    return r;
}

bool pattern_leq(const PrimePattern& a, const PrimePattern& b) {
    if (!(a.q <= b.q)) return false;
    auto tri_leq = [](const PrimeTriple& x, const PrimeTriple& y) {
        return x.loc <= y.loc && x.mod <= y.mod && x.pru <= y.pru;
    };
    if (!tri_leq(a.def, b.def)) return false;
    for (std::int64_t p : merged_primes(a, b))
        if (!tri_leq(a.triple_at(p), b.triple_at(p))) return false;
    return true;
}

Value eval_sum(const Value& a, const Value& b) {
    if (a.kind() == Kind::Int && b.kind() == Kind::Int)
        return Value{add(std::get<ExtInt>(a.v), std::get<ExtInt>(b.v))};
    if ((a.kind() == Kind::Group || is_zero_int(a)) &&
        (b.kind() == Kind::Group || is_zero_int(b)))
        return Value{sum(as_group(a), as_group(b))};
    if (gradedish(a) && gradedish(b)) return Value{direct_sum(as_graded(a), as_graded(b))};
    if (a.kind() == Kind::EFun && b.kind() == Kind::EFun)
        return Value{lattice_min(std::get<BocksteinFunction>(a.v),
                                 std::get<BocksteinFunction>(b.v))};
    if (a.kind() == Kind::DFun && b.kind() == Kind::DFun)
        return Value{DPattern{pattern_min(std::get<DPattern>(a.v).pat,
                                          std::get<DPattern>(b.v).pat)}};
    if (a.kind() == Kind::Profile && b.kind() == Kind::Profile)
        return Value{CompactumProfile::from_function(
            lattice_min(std::get<CompactumProfile>(a.v).d(),
                        std::get<CompactumProfile>(b.v).d()))};
    kind_fail2("'+'", a, b);
}

Value eval_smash(const Value& a, const Value& b) {
    if (a.kind() == Kind::EFun && b.kind() == Kind::EFun)
        return Value{smash(std::get<BocksteinFunction>(a.v), std::get<BocksteinFunction>(b.v))};
    if (a.kind() == Kind::Profile && b.kind() == Kind::Profile)
        return Value{dim_of_smash(std::get<CompactumProfile>(a.v),
                                  std::get<CompactumProfile>(b.v))};
    if (gradedish(a) && gradedish(b)) return Value{smash(as_graded(a), as_graded(b))};
    kind_fail2("'^'", a, b);
}

Value eval_sumprod(const Value& a, const Value& b) {
    if (a.kind() == Kind::EFun && b.kind() == Kind::EFun)
        return Value{sum_product(std::get<BocksteinFunction>(a.v),
                                 std::get<BocksteinFunction>(b.v))};
    if (a.kind() == Kind::Profile && b.kind() == Kind::Profile)
        return Value{dim_of_smash(std::get<CompactumProfile>(a.v),
                                  std::get<CompactumProfile>(b.v))};
    kind_fail2("'[+]'", a, b);
}

Value eval_call(const Expr& e, const std::vector<Value>& args) {
    const std::string& name = e.name;
    if (name == "min" || name == "max") {
        const Value& a = args[0];
        const Value& b = args[1];
        if (a.kind() == Kind::Int && b.kind() == Kind::Int) {
            ExtInt x = std::get<ExtInt>(a.v), y = std::get<ExtInt>(b.v);
            return Value{name == "min" ? min(x, y) : max(x, y)};
        }
        if (a.kind() == Kind::EFun && b.kind() == Kind::EFun) {
            const auto& x = std::get<BocksteinFunction>(a.v);
            const auto& y = std::get<BocksteinFunction>(b.v);
            return Value{name == "min" ? lattice_min(x, y) : lattice_max(x, y)};
        }
        kind_fail2(name, a, b);
    }
    if (name == "leq") {
        const Value& a = args[0];
        const Value& b = args[1];
        if (a.kind() == Kind::Int && b.kind() == Kind::Int)
            return Value{std::get<ExtInt>(a.v) <= std::get<ExtInt>(b.v)};
        if (a.kind() == Kind::EFun && b.kind() == Kind::EFun)
            return Value{leq(std::get<BocksteinFunction>(a.v),
                             std::get<BocksteinFunction>(b.v))};
        if (a.kind() == Kind::DFun && b.kind() == Kind::DFun)
            return Value{pattern_leq(std::get<DPattern>(a.v).pat,
                                     std::get<DPattern>(b.v).pat)};
        kind_fail2("leq", a, b);
    }
    if (name == "dim") {
        const Value& x = args[0];
        const Value& c = args[1];
        if (x.kind() == Kind::Profile) {
            const auto& prof = std::get<CompactumProfile>(x.v);
            if (c.kind() == Kind::Graded)
                return Value{dim_graded_coefficients(prof, std::get<GradedGroup>(c.v))};
            return Value{dim_with_coefficients(prof, as_group(c))};
        }
        if (gradedish(x)) return Value{dim_coeff(as_graded(x), as_group(c))};
        kind_fail2("dim", x, c);
    }
    if (name == "cin") return Value{cin(as_graded(args[0]))};
    if (name == "sigma") return Value{bockstein_basis(as_group(args[0]))};
    if (name == "testspace") {
        if (args[1].kind() != Kind::Int) kind_fail("testspace level", args[1]);
        ExtInt n = std::get<ExtInt>(args[1].v);
        if (!n.is_finite()) throw DomainError("testspace level must be finite");
        return Value{test_space(as_group(args[0]), n.finite())};
    }
    if (name == "moore") {
        if (args[0].kind() == Kind::EFun)
            return Value{moore_space_spec(std::get<BocksteinFunction>(args[0].v))};
        if (args[0].kind() == Kind::Profile)
            return Value{moore_space_spec(std::get<CompactumProfile>(args[0].v).d())};
        kind_fail("moore", args[0]);
    }
    if (name == "sp_ae") {
        if (args[0].kind() != Kind::Profile) kind_fail("sp_ae space", args[0]);
        if (args[1].kind() != Kind::EFun) kind_fail("sp_ae coefficient envelope", args[1]);
        return Value{sp_absolute_extensor(std::get<CompactumProfile>(args[0].v),
                                          std::get<BocksteinFunction>(args[1].v))};
    }
    if (name == "dpattern") {
        if (args[0].kind() != Kind::EFun) kind_fail("dpattern", args[0]);
        return Value{gg_d_function(std::get<BocksteinFunction>(args[0].v))};
    }
    throw InternalError("eval_call: unknown builtin " + name);
}

Value eval_node(const Expr& e, const Env& env);

bool already_annotated(const char* what) {
    return std::string_view(what).find("\n  at: ") != std::string_view::npos;
}

// Tags an error with the innermost subexpression it arose in; outer frames
// pass an already-tagged error through untouched.
Value eval_annotated(const Expr& e, const Env& env) {
    try {
        return eval_node(e, env);
    } catch (ValidationError& err) {
        if (already_annotated(err.what())) throw;
        throw ValidationError(std::string(err.what()) + "\n  at: " + print_expression(e),
                              err.violations);
    } catch (const KindError& err) {
        if (already_annotated(err.what())) throw;
        throw KindError(std::string(err.what()) + "\n  at: " + print_expression(e));
    } catch (const DomainError& err) {
        if (already_annotated(err.what())) throw;
        throw DomainError(std::string(err.what()) + "\n  at: " + print_expression(e));
    }
}

Value eval_node(const Expr& e, const Env& env) {
    switch (e.op) {
    case Expr::Op::IntLit: return Value{e.number};
    case Expr::Op::GroupLit: return Value{e.group};
    case Expr::Op::PatternLit: {
        if (e.pattern_kind == 1) {
            PrimePattern p = e.pattern;
            p.normalize();
            return Value{DPattern{std::move(p)}};
        }
        BocksteinFunction f = BocksteinFunction::from_pattern(e.pattern);
        if (e.pattern_kind == 2) return Value{CompactumProfile::from_function(std::move(f))};
        return Value{std::move(f)};
    }
    case Expr::Op::Ident: {
        auto it = env.find(e.name);
        if (it == env.end()) throw ParseError("unbound identifier '" + e.name + "'");
        return it->second;
    }
    case Expr::Op::Sum:
        return eval_sum(eval_annotated(*e.args[0], env), eval_annotated(*e.args[1], env));
    case Expr::Op::SumProd:
        return eval_sumprod(eval_annotated(*e.args[0], env), eval_annotated(*e.args[1], env));
    case Expr::Op::Smash:
        return eval_smash(eval_annotated(*e.args[0], env), eval_annotated(*e.args[1], env));
    case Expr::Op::Eq: {
        Value a = eval_annotated(*e.args[0], env);
        Value b = eval_annotated(*e.args[1], env);
        if (a.kind() != b.kind()) kind_fail2("'=='", a, b);
        return Value{a == b};
    }
    case Expr::Op::Dual: {
        Value a = eval_annotated(*e.args[0], env);
        if (a.kind() != Kind::EFun) kind_fail("dual", a);
        return Value{dual(std::get<BocksteinFunction>(a.v))};
    }
    case Expr::Op::Suspend: {
        Value a = eval_annotated(*e.args[0], env);
        if (a.kind() == Kind::EFun) {
            if (!e.number.is_finite())
                throw DomainError("function shift amount must be finite");
            return Value{shift(std::get<BocksteinFunction>(a.v), e.number.finite())};
        }
        if (gradedish(a)) return Value{suspend(as_graded(a), e.number)};
        kind_fail("S^k", a);
    }
    case Expr::Op::Call: {
        std::vector<Value> args;
        args.reserve(e.args.size());
        for (const auto& arg : e.args) args.push_back(eval_annotated(*arg, env));
        return eval_call(e, args);
    }
    }
    throw InternalError("eval_node: unhandled node");
}

} // namespace

std::string kind_name(Kind k) {
    switch (k) {
    case Kind::Int: return "extint";
    case Kind::Bool: return "bool";
    case Kind::Group: return "group";
    case Kind::Graded: return "graded";
    case Kind::EFun: return "efun";
    case Kind::DFun: return "dfun";
    case Kind::Profile: return "profile";
    case Kind::Basis: return "basis";
    case Kind::Moore: return "moore";
    }
    return "?";
}

// The variant alternatives are declared in Kind order.
Kind Value::kind() const { return static_cast<Kind>(v.index()); }

namespace {

std::string basis_members(const BasisTriple& t, const std::string& p) {
    std::vector<std::string> parts;
    if (t.loc) parts.push_back("Z_(" + p + ")");
    if (t.mod) parts.push_back("Z/" + p);
    if (t.pru) parts.push_back("Z/" + p + "^inf");
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return out + "}";
}

} // namespace

std::string to_text(const Value& val) {
    switch (val.kind()) {
    case Kind::Int: return to_string(std::get<ExtInt>(val.v));
    case Kind::Bool: return std::get<bool>(val.v) ? "true" : "false";
    case Kind::Group: return to_string(std::get<FiniteSumGroup>(val.v));
    case Kind::Graded: return to_string(std::get<GradedGroup>(val.v));
    case Kind::EFun: return to_string(std::get<BocksteinFunction>(val.v));
    case Kind::DFun: return to_string(std::get<DPattern>(val.v));
    case Kind::Profile: return to_string(std::get<CompactumProfile>(val.v));
    case Kind::Basis: {
        const auto& b = std::get<BocksteinBasisSet>(val.v);
        std::ostringstream os;
        os << "basis{Q: " << (b.has_q() ? "yes" : "no")
           << ", generic: " << basis_members(b.default_triple(), "p");
        for (const auto& [p, t] : b.exceptions())
            os << ", " << p << ": " << basis_members(t, std::to_string(p));
        os << "}";
        return os.str();
    }
    case Kind::Moore: return to_string(std::get<MooreSpaceSpec>(val.v));
    }
    return "?";
}

nlohmann::json to_json_value(const Value& val) {
    switch (val.kind()) {
    case Kind::Int: return nlohmann::json(std::get<ExtInt>(val.v));
    case Kind::Bool: return nlohmann::json(std::get<bool>(val.v));
    case Kind::Group: return nlohmann::json(std::get<FiniteSumGroup>(val.v));
    case Kind::Graded: return nlohmann::json(std::get<GradedGroup>(val.v));
    case Kind::EFun: return nlohmann::json(std::get<BocksteinFunction>(val.v));
    case Kind::DFun: return nlohmann::json(std::get<DPattern>(val.v));
    case Kind::Profile: return nlohmann::json(std::get<CompactumProfile>(val.v));
    case Kind::Basis: return nlohmann::json(std::get<BocksteinBasisSet>(val.v));
    case Kind::Moore: return nlohmann::json(std::get<MooreSpaceSpec>(val.v));
    }
    return nullptr;
}

std::unique_ptr<Expr> parse_expression(const std::string& text) {
    return Parser(lex(text)).run();
}

std::string print_expression(const Expr& e) {
    std::ostringstream os;
    print_into(e, os, 0);
    return os.str();
}

Value evaluate(const Expr& e, const Env& env) { return eval_annotated(e, env); }

bool is_reserved_word(const std::string& name) {
    if (builtin_names().count(name)) return true;
    static const std::set<std::string> keywords{"S",   "Z",    "Q",       "Z_",
                                               "efun", "dfun", "profile", "inf",
                                               "infinity", "coeff"};
    return keywords.count(name) != 0;
}

} // namespace dimalg::cli
