#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "bicalo/jet.hpp"

namespace bicalo {

// Parsed holomorphic expression in the single free variable "tau".
// Trees are immutable after parsing and safe to share across threads.
//
// Grammar (see parse()):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' factor)?
//   atom   := number | imaginary | 'i' | 'tau' | ident '(' expr ')' | '(' expr ')'
// '^' is right-associative; unary minus binds looser than '^', so
// "-tau^2" parses as -(tau^2). A number immediately followed by 'i'
// ("2i", as in "(1+2i)") is an imaginary literal.
class HoloExpr {
  public:
    enum class Kind { constant, variable, add, sub, mul, div, neg, pow, call };
    enum class Builtin { exp, log, sqrt, sin, cos, tan, sinh, cosh, tanh };

    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        Kind kind;
        Complex value{};       // constant
        Builtin func{};        // call
        NodePtr lhs, rhs;      // rhs empty for neg/call
    };

    HoloExpr() = default;
    explicit HoloExpr(NodePtr root) : root_(std::move(root)) {}

    const Node& root() const { return *root_; }
    bool empty() const { return root_ == nullptr; }

    // Programmatic constructors (the parser is the usual entry point).
    static HoloExpr constant(Complex c);
    static HoloExpr variable();
    static HoloExpr binary(Kind op, HoloExpr a, HoloExpr b);
    static HoloExpr negate(HoloExpr a);
    static HoloExpr call(Builtin f, HoloExpr a);

  private:
    NodePtr root_;
};

// Parses UTF-8 source text into an AST. Throws ParseError with the byte
// offset of the offending character and the expected-token set.
HoloExpr parse(std::string_view source);

// Renders an AST back to source text such that parse(pretty(parse(s)))
// is structurally identical to parse(s). Constants with both a real and
// an imaginary part render as "(a+bi)", which reparses as a sum.
std::string pretty(const HoloExpr& e);

// Structural equality.
bool ast_equal(const HoloExpr& a, const HoloExpr& b);

// Evaluates (f(tau), f'(tau), f''(tau)) by jet propagation through the
// tree. Throws DomainError at singularities and on non-finite results.
Jet2 eval_jet(const HoloExpr& e, Complex tau);

}  // namespace bicalo
