#include "bicalo/jet.hpp"

#include <cmath>

namespace bicalo {

namespace {

// g(f) for a scalar function with known first and second derivatives at
// f.val: d1 = g'*f', d2 = g''*f'^2 + g'*f''.
Jet2 chain(Complex g, Complex gp, Complex gpp, const Jet2& f) {
    return {g, gp * f.d1, gpp * f.d1 * f.d1 + gp * f.d2};
}

bool on_log_cut(Complex v) { return v.imag() == 0.0 && v.real() <= 0.0; }

}  // namespace

Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.val + b.val, a.d1 + b.d1, a.d2 + b.d2}; }

Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.val - b.val, a.d1 - b.d1, a.d2 - b.d2}; }

Jet2 operator-(const Jet2& a) { return {-a.val, -a.d1, -a.d2}; }

Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.val * b.val, a.d1 * b.val + a.val * b.d1,
            a.d2 * b.val + 2.0 * a.d1 * b.d1 + a.val * b.d2};
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
    if (b.val == Complex{0.0, 0.0}) throw DomainError("division by zero");
    const Complex q = a.val / b.val;
    const Complex q1 = (a.d1 - q * b.d1) / b.val;
    const Complex q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.val;
    return {q, q1, q2};
}

Jet2 jet_exp(const Jet2& a) {
    const Complex e = std::exp(a.val);
    return chain(e, e, e, a);
}

Jet2 jet_log(const Jet2& a) {
    if (on_log_cut(a.val)) throw DomainError("log on branch cut or at zero");
    const Complex inv = 1.0 / a.val;
    return chain(std::log(a.val), inv, -inv * inv, a);
}

Jet2 jet_sqrt(const Jet2& a) {
    if (on_log_cut(a.val)) throw DomainError("sqrt on branch cut or at zero");
    const Complex s = std::sqrt(a.val);
    const Complex gp = 0.5 / s;
    return chain(s, gp, -0.5 * gp / a.val, a);
}

Jet2 jet_sin(const Jet2& a) {
    const Complex s = std::sin(a.val), c = std::cos(a.val);
    return chain(s, c, -s, a);
}

Jet2 jet_cos(const Jet2& a) {
    const Complex s = std::sin(a.val), c = std::cos(a.val);
    return chain(c, -s, -c, a);
}

Jet2 jet_tan(const Jet2& a) { return jet_sin(a) / jet_cos(a); }

Jet2 jet_sinh(const Jet2& a) {
    const Complex s = std::sinh(a.val), c = std::cosh(a.val);
    return chain(s, c, s, a);
}

Jet2 jet_cosh(const Jet2& a) {
    const Complex s = std::sinh(a.val), c = std::cosh(a.val);
    return chain(c, s, c, a);
}

Jet2 jet_tanh(const Jet2& a) { return jet_sinh(a) / jet_cosh(a); }

Jet2 jet_ipow(const Jet2& a, long long k) {
    if (k < 0) {
        if (a.val == Complex{0.0, 0.0})
            throw DomainError("pow with zero base and negative exponent");
        return jet_const({1.0, 0.0}) / jet_ipow(a, -k);
    }
    Jet2 result = jet_const({1.0, 0.0});
    Jet2 base = a;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

Jet2 jet_pow(const Jet2& a, const Jet2& b) {
    const bool b_const = b.d1 == Complex{} && b.d2 == Complex{};
    if (b_const && b.val.imag() == 0.0) {
        const double re = b.val.real();
        if (re == std::nearbyint(re) && std::abs(re) <= 1e9)
            return jet_ipow(a, static_cast<long long>(re));
    }
    if (a.val == Complex{0.0, 0.0})
        throw DomainError("pow with zero base and non-positive-real or non-integer exponent");
    return jet_exp(b * jet_log(a));
}

Jet2 jet_compose(const Jet2& a, const Jet2& b, JetOp op) {
    switch (op) {
        case JetOp::add: return a + b;
        case JetOp::sub: return a - b;
        case JetOp::mul: return a * b;
        case JetOp::div: return a / b;
        case JetOp::pow: return jet_pow(a, b);
    }
    throw Error("unreachable jet op");
}

}  // namespace bicalo
