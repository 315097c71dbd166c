#pragma once

#include <complex>

#include "bicalo/errors.hpp"

namespace bicalo {

using Complex = std::complex<double>;

// Value and first two derivatives of a holomorphic function at a point,
// propagated through expressions with exact product/quotient/chain rules.
struct Jet2 {
    Complex val{};
    Complex d1{};
    Complex d2{};
};

// Seed for the free variable at tau0: (tau0, 1, 0).
inline Jet2 jet_var(Complex tau0) { return {tau0, {1.0, 0.0}, {0.0, 0.0}}; }

inline Jet2 jet_const(Complex c) { return {c, {0.0, 0.0}, {0.0, 0.0}}; }

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a);
Jet2 operator*(const Jet2& a, const Jet2& b);
// Throws DomainError when b.val == 0.
Jet2 operator/(const Jet2& a, const Jet2& b);

// Principal-branch elementary functions. log and sqrt throw DomainError at
// the origin and on the closed negative real axis (the branch cut); tan and
// tanh throw where their denominators vanish.
Jet2 jet_exp(const Jet2& a);
Jet2 jet_log(const Jet2& a);
Jet2 jet_sqrt(const Jet2& a);
Jet2 jet_sin(const Jet2& a);
Jet2 jet_cos(const Jet2& a);
Jet2 jet_tan(const Jet2& a);
Jet2 jet_sinh(const Jet2& a);
Jet2 jet_cosh(const Jet2& a);
Jet2 jet_tanh(const Jet2& a);

// Integer power by repeated squaring; exact for polynomial towers and
// well defined for a.val == 0 when k >= 0. Negative k with zero base
// throws DomainError.
Jet2 jet_ipow(const Jet2& a, long long k);

// a^b = exp(b * log a) with the principal log. When b is a constant jet
// whose value is a real integer the call lowers to jet_ipow, which agrees
// with the principal-branch definition for nonzero bases and extends it to
// zero bases with positive integer exponents.
Jet2 jet_pow(const Jet2& a, const Jet2& b);

enum class JetOp { add, sub, mul, div, pow };

// Leibniz/chain-rule-correct combination of two jets.
Jet2 jet_compose(const Jet2& a, const Jet2& b, JetOp op);

}  // namespace bicalo
