#include "glam/expr.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

#include "glam/combinatorics.hpp"
#include "glam/uea.hpp"

namespace glam {

std::string_view universe_name(Universe u) {
    switch (u) {
        case Universe::scalar: return "scalar";
        case Universe::xpoly: return "x-polynomial";
        case Universe::op: return "operator";
        case Universe::uea: return "enveloping-algebra";
        case Universe::symbol: return "symbol";
    }
    return "?";
}

ExprError::ExprError(std::size_t offset, const std::string& message)
    : std::runtime_error("at offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
    std::string s;
    for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
    return s;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, const std::string& message, std::vector<std::string> expected)
    : ExprError(offset, expected.empty() ? message : message + " (expected one of: " + describe_expected(expected) + ")"),
      expected_(std::move(expected)) {}

namespace {

constexpr std::size_t kMaxDepth = 200;
constexpr unsigned kMaxExponent = 64;
constexpr std::size_t kMaxSymArgs = 8;

const std::vector<std::string> kSymbols = {"l", "x", "d", "xi", "e0", "e1", "e2", "delta"};
const std::vector<std::string> kFunctions = {"L", "sym", "com"};

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, comma, end };

struct Token {
    Tok kind = Tok::end;
    std::size_t offset = 0;
    std::string text;
};

std::string tok_name(Tok t) {
    switch (t) {
        case Tok::number: return "number";
        case Tok::ident: return "identifier";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::caret: return "'^'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::end: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto digit = [&](std::size_t k) { return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (digit(i)) ++i;
            if (i < s.size() && s[i] == '/') {
                if (!digit(i + 1)) throw SyntaxError(i + 1, "malformed rational literal", {"digit"});
                ++i;
                while (digit(i)) ++i;
            }
            out.push_back({Tok::number, start, std::string(s.substr(start, i - start))});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::ident, start, std::string(s.substr(start, i - start))});
            continue;
        }
        Tok t;
        switch (c) {
            case '+': t = Tok::plus; break;
            case '-': t = Tok::minus; break;
            case '*': t = Tok::star; break;
            case '^': t = Tok::caret; break;
            case '(': t = Tok::lparen; break;
            case ')': t = Tok::rparen; break;
            case ',': t = Tok::comma; break;
            default:
                throw SyntaxError(start, std::string("unexpected character '") + c + "'",
                                  {"number", "identifier", "'('", "'-'"});
        }
        out.push_back({t, start, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::end, s.size(), ""});
    return out;
}

std::optional<Universe> join(Universe a, Universe b) {
    if (a == b) return a;
    if (a == Universe::scalar) return b;
    if (b == Universe::scalar) return a;
    if (a == Universe::xpoly && (b == Universe::op || b == Universe::symbol)) return b;
    if (b == Universe::xpoly && (a == Universe::op || a == Universe::symbol)) return a;
    return std::nullopt;
}

Universe join_or_throw(Universe a, Universe b, std::size_t offset) {
    if (auto u = join(a, b)) return *u;
    throw TypeError(offset, "cannot mix " + std::string(universe_name(a)) + " and " + std::string(universe_name(b)) +
                                " expressions");
}

Universe symbol_type(const std::string& name) {
    if (name == "l") return Universe::scalar;
    if (name == "x") return Universe::xpoly;
    if (name == "d") return Universe::op;
    if (name == "xi") return Universe::symbol;
    return Universe::uea;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Expr parse_all() {
        Expr e = expr();
        if (peek().kind != Tok::end) fail({"'+'", "'-'", "'*'", "end of input"});
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        const std::string what = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        throw SyntaxError(t.offset, "unexpected " + what, std::move(expected));
    }

    void expect(Tok t) {
        if (peek().kind != t) fail({tok_name(t)});
        take();
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : p(p) {
            if (++p.depth_ > kMaxDepth) throw SyntaxError(p.peek().offset, "expression nested too deeply", {});
        }
        ~DepthGuard() { --p.depth_; }
        Parser& p;
    };

    static Expr binary(Expr::Kind kind, std::size_t offset, Expr lhs, Expr rhs) {
        Expr e;
        e.kind = kind;
        e.offset = offset;
        e.type = join_or_throw(lhs.type, rhs.type, offset);
        e.args.push_back(std::move(lhs));
        e.args.push_back(std::move(rhs));
        return e;
    }

    Expr expr() {
        DepthGuard guard(*this);
        Expr lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token op = take();
            Expr rhs = term();
            lhs = binary(op.kind == Tok::plus ? Expr::Kind::add : Expr::Kind::sub, op.offset, std::move(lhs),
                         std::move(rhs));
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = unary();
        while (peek().kind == Tok::star) {
            const Token op = take();
            Expr rhs = unary();
            lhs = binary(Expr::Kind::mul, op.offset, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr unary() {
        DepthGuard guard(*this);
        if (peek().kind == Tok::minus) {
            const Token op = take();
            Expr inner = unary();
            Expr e;
            e.kind = Expr::Kind::negate;
            e.offset = op.offset;
            e.type = inner.type;
            e.args.push_back(std::move(inner));
            return e;
        }
        return power();
    }

    Expr power() {
        Expr base = atom();
        if (peek().kind != Tok::caret) return base;
        const Token op = take();
        if (peek().kind != Tok::number) fail({"nonnegative integer exponent"});
        const Token num = take();
        if (num.text.find('/') != std::string::npos)
            throw SyntaxError(num.offset, "exponent must be a nonnegative integer", {"nonnegative integer exponent"});
        if (num.text.size() > 6 || std::stoul(num.text) > kMaxExponent)
            throw SyntaxError(num.offset, "exponent exceeds " + std::to_string(kMaxExponent), {});
        Expr e;
        e.kind = Expr::Kind::pow;
        e.offset = op.offset;
        e.type = base.type;
        e.exponent = static_cast<unsigned>(std::stoul(num.text));
        e.args.push_back(std::move(base));
        return e;
    }

    Expr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                Expr e;
                e.kind = Expr::Kind::number;
                e.offset = t.offset;
                e.type = Universe::scalar;
                e.number = Rational::parse(t.text);
                take();
                return e;
            }
            case Tok::lparen: {
                take();
                Expr e = expr();
                expect(Tok::rparen);
                return e;
            }
            case Tok::ident: return identifier();
            default: fail({"number", "identifier", "'('", "'-'"});
        }
    }

    Expr identifier() {
        const Token t = take();
        const bool is_symbol = std::find(kSymbols.begin(), kSymbols.end(), t.text) != kSymbols.end();
        const bool is_function = std::find(kFunctions.begin(), kFunctions.end(), t.text) != kFunctions.end();
        if (is_symbol) {
            Expr e;
            e.kind = Expr::Kind::symbol;
            e.offset = t.offset;
            e.name = t.text;
            e.type = symbol_type(t.text);
            return e;
        }
        if (!is_function) {
            std::vector<std::string> expected = kSymbols;
            expected.insert(expected.end(), kFunctions.begin(), kFunctions.end());
            throw SyntaxError(t.offset, "unknown identifier '" + t.text + "'", std::move(expected));
        }
        expect(Tok::lparen);
        Expr call;
        call.kind = Expr::Kind::call;
        call.offset = t.offset;
        call.name = t.text;
        call.args.push_back(expr());
        while (peek().kind == Tok::comma) {
            take();
            call.args.push_back(expr());
        }
        if (peek().kind != Tok::rparen) fail({"','", "')'"});
        take();
        type_call(call);
        return call;
    }

    static void type_call(Expr& call) {
        const std::size_t n = call.args.size();
        if (call.name == "L") {
            if (n != 1) throw TypeError(call.offset, "L() takes exactly one vector field");
            const Universe a = call.args[0].type;
            if (a != Universe::op)
                throw TypeError(call.args[0].offset,
                                "L() expects a vector field X(x)*d, got a " + std::string(universe_name(a)) + " expression");
            call.type = Universe::op;
            return;
        }
        if (call.name == "com" && n != 2) throw TypeError(call.offset, "com() takes exactly two arguments");
        if (call.name == "sym" && n > kMaxSymArgs)
            throw TypeError(call.offset, "sym() takes at most " + std::to_string(kMaxSymArgs) + " arguments");
        Universe u = call.args[0].type;
        for (std::size_t i = 1; i < n; ++i) u = join_or_throw(u, call.args[i].type, call.args[i].offset);
        call.type = u;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
};

// Per-universe algebra operations used by the evaluator.
template <typename T>
struct Algebra;

template <>
struct Algebra<DiffOp> {
    static DiffOp scalar(const LambdaPoly& c) { return DiffOp::scalar(c); }
    static DiffOp mul(const DiffOp& a, const DiffOp& b) { return compose(a, b); }
};

template <>
struct Algebra<UEAElement> {
    static UEAElement scalar(const LambdaPoly& c) { return UEAElement::scalar(c); }
    static UEAElement mul(const UEAElement& a, const UEAElement& b) { return a * b; }
};

template <>
struct Algebra<SymbolPoly> {
    static SymbolPoly scalar(const LambdaPoly& c) { return SymbolPoly::monomial(c, 0, 0); }
    static SymbolPoly mul(const SymbolPoly& a, const SymbolPoly& b) { return a * b; }
};

template <typename T>
T eval(const Expr& e);

template <typename T>
T eval_symbol(const Expr& e) {
    using A = Algebra<T>;
    if (e.name == "l") return A::scalar(LambdaPoly::lambda());
    if constexpr (std::is_same_v<T, DiffOp>) {
        if (e.name == "x") return DiffOp::monomial(LambdaPoly(1), 1, 0);
        if (e.name == "d") return DiffOp::monomial(LambdaPoly(1), 0, 1);
    } else if constexpr (std::is_same_v<T, SymbolPoly>) {
        if (e.name == "x") return SymbolPoly::monomial(LambdaPoly(1), 1, 0);
        if (e.name == "xi") return SymbolPoly::monomial(LambdaPoly(1), 0, 1);
    } else {
        if (e.name == "delta") return casimir();
        if (e.name.size() == 2 && e.name[0] == 'e') return UEAElement::generator(static_cast<Gen>(e.name[1] - '0'));
    }
    throw TypeError(e.offset, "symbol '" + e.name + "' is not available here");
}

template <typename T>
T eval_symmetrized(const Expr& e) {
    std::vector<T> parts;
    for (const auto& a : e.args) parts.push_back(eval<T>(a));
    if constexpr (std::is_same_v<T, DiffOp>) {
        return symmetrized_product(parts);
    } else {
        std::vector<std::size_t> idx(parts.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        T total;
        do {
            T prod = Algebra<T>::scalar(LambdaPoly(1));
            for (auto i : idx) prod = Algebra<T>::mul(prod, parts[i]);
            total += prod;
        } while (std::next_permutation(idx.begin(), idx.end()));
        return total;
    }
}

template <typename T>
T eval(const Expr& e) {
    using A = Algebra<T>;
    switch (e.kind) {
        case Expr::Kind::number: return A::scalar(LambdaPoly(e.number));
        case Expr::Kind::symbol: return eval_symbol<T>(e);
        case Expr::Kind::negate: return -eval<T>(e.args[0]);
        case Expr::Kind::add: return eval<T>(e.args[0]) + eval<T>(e.args[1]);
        case Expr::Kind::sub: return eval<T>(e.args[0]) - eval<T>(e.args[1]);
        case Expr::Kind::mul: return A::mul(eval<T>(e.args[0]), eval<T>(e.args[1]));
        case Expr::Kind::pow: {
            const T base = eval<T>(e.args[0]);
            T acc = A::scalar(LambdaPoly(1));
            for (unsigned i = 0; i < e.exponent; ++i) acc = A::mul(acc, base);
            return acc;
        }
        case Expr::Kind::call: {
            if (e.name == "L") {
                if constexpr (std::is_same_v<T, DiffOp>) {
                    return lie_derivative(as_vector_field(eval<DiffOp>(e.args[0]), e.args[0].offset));
                } else {
                    throw TypeError(e.offset, "L() yields an operator");
                }
            }
            if (e.name == "sym") return eval_symmetrized<T>(e);
            const T a = eval<T>(e.args[0]);
            const T b = eval<T>(e.args[1]);
            return A::mul(a, b) - A::mul(b, a);
        }
    }
    throw std::logic_error("unhandled expression kind");
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

Value elaborate(const Expr& e) {
    switch (e.type) {
        case Universe::uea: return eval<UEAElement>(e);
        case Universe::symbol: return eval<SymbolPoly>(e);
        default: return eval<DiffOp>(e);
    }
}

Value elaborate_as(const Expr& e, Universe target) {
    if (target == Universe::scalar || target == Universe::xpoly)
        throw std::invalid_argument("elaborate_as: target must be op, uea or symbol");
    auto u = join(e.type, target);
    if (!u || *u != target)
        throw TypeError(e.offset, "expected " + std::string(universe_name(target)) + " expression, got " +
                                      std::string(universe_name(e.type)));
    switch (target) {
        case Universe::uea: return eval<UEAElement>(e);
        case Universe::symbol: return eval<SymbolPoly>(e);
        default: return eval<DiffOp>(e);
    }
}

PolyField as_vector_field(const DiffOp& A, std::size_t offset) {
    std::vector<Rational> cs;
    for (const auto& [key, c] : A.terms()) {
        if (key.dpow != 1 || !c.is_constant())
            throw TypeError(offset, "expected a vector field X(x)*d with rational coefficients");
        if (cs.size() <= key.xpow) cs.resize(key.xpow + 1);
        cs[key.xpow] = c.coefficient(0);
    }
    return PolyField(std::move(cs));
}

}  // namespace glam
