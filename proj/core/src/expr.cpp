#include "bicalo/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

namespace bicalo {

namespace {

using Kind = HoloExpr::Kind;
using Builtin = HoloExpr::Builtin;
using NodePtr = HoloExpr::NodePtr;

constexpr std::array<std::pair<std::string_view, Builtin>, 9> kBuiltins{{
    {"exp", Builtin::exp},
    {"log", Builtin::log},
    {"sqrt", Builtin::sqrt},
    {"sin", Builtin::sin},
    {"cos", Builtin::cos},
    {"tan", Builtin::tan},
    {"sinh", Builtin::sinh},
    {"cosh", Builtin::cosh},
    {"tanh", Builtin::tanh},
}};

std::string_view builtin_name(Builtin f) {
    for (const auto& [name, id] : kBuiltins)
        if (id == f) return name;
    return "?";
}

NodePtr make(Kind k, Complex value, Builtin func, NodePtr lhs, NodePtr rhs) {
    return std::make_shared<const HoloExpr::Node>(
        HoloExpr::Node{k, value, func, std::move(lhs), std::move(rhs)});
}

class Parser {
  public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr run() {
        skip_space();
        NodePtr e = expr();
        skip_space();
        if (pos_ != src_.size()) fail("operator or end of input");
        return e;
    }

  private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::string expected) {
        std::string msg = "syntax error at offset " + std::to_string(pos_) +
                          ": expected " + expected;
        throw ParseError(std::move(msg), pos_, std::move(expected));
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    bool accept(char c) {
        skip_space();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = make(Kind::add, {}, {}, std::move(lhs), term());
            else if (accept('-'))
                lhs = make(Kind::sub, {}, {}, std::move(lhs), term());
            else
                return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        for (;;) {
            if (accept('*'))
                lhs = make(Kind::mul, {}, {}, std::move(lhs), factor());
            else if (accept('/'))
                lhs = make(Kind::div, {}, {}, std::move(lhs), factor());
            else
                return lhs;
        }
    }

    NodePtr factor() {
        if (accept('-')) return make(Kind::neg, {}, {}, factor(), nullptr);
        NodePtr base = atom();
        if (accept('^')) return make(Kind::pow, {}, {}, std::move(base), factor());
        return base;
    }

    NodePtr atom() {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            skip_space();
            if (!accept(')')) fail("')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("number, 'i', 'tau', function call, or '('");
    }

    NodePtr number() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '.') {
            ++pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t mark = pos_;
            ++pos_;
            if (peek() == '+' || peek() == '-') ++pos_;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            } else {
                pos_ = mark;  // "2e" was "2" followed by an identifier
            }
        }
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (ec != std::errc{} || ptr != src_.data() + pos_) {
            pos_ = start;
            fail("number");
        }
        // "2i" (no space) is an imaginary literal.
        if (peek() == 'i' && !is_ident_char(pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0')) {
            ++pos_;
            return make(Kind::constant, Complex{0.0, v}, {}, nullptr, nullptr);
        }
        return make(Kind::constant, Complex{v, 0.0}, {}, nullptr, nullptr);
    }

    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (is_ident_char(peek())) ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);
        if (name == "tau") return make(Kind::variable, {}, {}, nullptr, nullptr);
        if (name == "i") return make(Kind::constant, Complex{0.0, 1.0}, {}, nullptr, nullptr);
        if (accept('(')) {
            for (const auto& [fname, id] : kBuiltins) {
                if (name == fname) {
                    NodePtr arg = expr();
                    skip_space();
                    if (!accept(')')) fail("')'");
                    return make(Kind::call, {}, id, std::move(arg), nullptr);
                }
            }
            pos_ = start;
            fail("known function name (exp, log, sqrt, sin, cos, tan, sinh, cosh, tanh)");
        }
        pos_ = start;
        fail("'tau', 'i', or a function name; unknown identifier '" + std::string(name) + "'");
    }
};

int precedence(Kind k) {
    switch (k) {
        case Kind::add:
        case Kind::sub: return 1;
        case Kind::mul:
        case Kind::div: return 2;
        case Kind::neg: return 3;
        case Kind::pow: return 4;
        default: return 5;
    }
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print(const HoloExpr::Node& n, std::string& out);

// Parenthesize the child when reparsing it at this position would bind
// differently. Left-associative chains reparse identically without parens;
// right children of the same precedence need them (except pow, which is
// right-associative).
void print_child(const HoloExpr::Node& child, int parent_prec, bool needs_paren_at_equal,
                 std::string& out) {
    const int child_prec = precedence(child.kind);
    const bool paren = child_prec < parent_prec || (child_prec == parent_prec && needs_paren_at_equal);
    if (paren) out += '(';
    print(child, out);
    if (paren) out += ')';
}

void print(const HoloExpr::Node& n, std::string& out) {
    switch (n.kind) {
        case Kind::constant: {
            const double re = n.value.real(), im = n.value.imag();
            if (im == 0.0 && !std::signbit(re)) {
                out += format_double(re);
            } else if (re == 0.0 && !std::signbit(im)) {
                out += format_double(im);
                out += 'i';
            } else {
                // General constants have no literal form; emit an
                // arithmetically equivalent subexpression.
                out += "(0";
                out += re < 0.0 ? '-' : '+';
                out += format_double(std::abs(re));
                out += im < 0.0 ? '-' : '+';
                out += format_double(std::abs(im));
                out += "i)";
            }
            return;
        }
        case Kind::variable: out += "tau"; return;
        case Kind::add:
        case Kind::sub:
        case Kind::mul:
        case Kind::div: {
            const int prec = precedence(n.kind);
            print_child(*n.lhs, prec, false, out);
            out += n.kind == Kind::add ? '+' : n.kind == Kind::sub ? '-'
                   : n.kind == Kind::mul ? '*' : '/';
            print_child(*n.rhs, prec, true, out);
            return;
        }
        case Kind::neg:
            out += '-';
            print_child(*n.lhs, precedence(Kind::neg), false, out);
            return;
        case Kind::pow:
            // The base may not contain an unparenthesized '-' or operator;
            // the exponent is a factor, so neg and pow reparse unchanged.
            print_child(*n.lhs, precedence(Kind::pow) + 1, false, out);
            out += '^';
            print_child(*n.rhs, precedence(Kind::neg), false, out);
            return;
        case Kind::call:
            out += builtin_name(n.func);
            out += '(';
            print(*n.lhs, out);
            out += ')';
            return;
    }
}

Jet2 eval(const HoloExpr::Node& n, Complex tau) {
    switch (n.kind) {
        case Kind::constant: return jet_const(n.value);
        case Kind::variable: return jet_var(tau);
        case Kind::add: return eval(*n.lhs, tau) + eval(*n.rhs, tau);
        case Kind::sub: return eval(*n.lhs, tau) - eval(*n.rhs, tau);
        case Kind::mul: return eval(*n.lhs, tau) * eval(*n.rhs, tau);
        case Kind::div: return eval(*n.lhs, tau) / eval(*n.rhs, tau);
        case Kind::neg: return -eval(*n.lhs, tau);
        case Kind::pow: return jet_pow(eval(*n.lhs, tau), eval(*n.rhs, tau));
        case Kind::call: {
            const Jet2 a = eval(*n.lhs, tau);
            switch (n.func) {
                case Builtin::exp: return jet_exp(a);
                case Builtin::log: return jet_log(a);
                case Builtin::sqrt: return jet_sqrt(a);
                case Builtin::sin: return jet_sin(a);
                case Builtin::cos: return jet_cos(a);
                case Builtin::tan: return jet_tan(a);
                case Builtin::sinh: return jet_sinh(a);
                case Builtin::cosh: return jet_cosh(a);
                case Builtin::tanh: return jet_tanh(a);
            }
            break;
        }
    }
    throw Error("unreachable expression node");
}

bool node_equal(const HoloExpr::Node& a, const HoloExpr::Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Kind::constant: return a.value == b.value;
        case Kind::variable: return true;
        case Kind::neg: return node_equal(*a.lhs, *b.lhs);
        case Kind::call: return a.func == b.func && node_equal(*a.lhs, *b.lhs);
        default: return node_equal(*a.lhs, *b.lhs) && node_equal(*a.rhs, *b.rhs);
    }
}

}  // namespace

HoloExpr HoloExpr::constant(Complex c) { return HoloExpr(make(Kind::constant, c, {}, nullptr, nullptr)); }
HoloExpr HoloExpr::variable() { return HoloExpr(make(Kind::variable, {}, {}, nullptr, nullptr)); }
HoloExpr HoloExpr::binary(Kind op, HoloExpr a, HoloExpr b) {
    return HoloExpr(make(op, {}, {}, a.root_, b.root_));
}
HoloExpr HoloExpr::negate(HoloExpr a) { return HoloExpr(make(Kind::neg, {}, {}, a.root_, nullptr)); }
HoloExpr HoloExpr::call(Builtin f, HoloExpr a) { return HoloExpr(make(Kind::call, {}, f, a.root_, nullptr)); }

HoloExpr parse(std::string_view source) { return HoloExpr(Parser(source).run()); }

std::string pretty(const HoloExpr& e) {
    std::string out;
    print(e.root(), out);
    return out;
}

bool ast_equal(const HoloExpr& a, const HoloExpr& b) { return node_equal(a.root(), b.root()); }

Jet2 eval_jet(const HoloExpr& e, Complex tau) {
    if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag()))
        throw DomainError("non-finite evaluation point");
    const Jet2 j = eval(e.root(), tau);
    for (const Complex& c : {j.val, j.d1, j.d2})
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw DomainError("non-finite jet component");
    return j;
}

}  // namespace bicalo
