#include "bicalo/small.hpp"

#include <cmath>

namespace bicalo {

NullCurveMatrix small_matrix(const Jet2& fj, Complex tau, bool flip_branch) {
    if (std::abs(fj.d1) < 1e-14) throw ZeroDerivative("f'(tau) ~ 0");
    Complex p = std::sqrt(fj.d1);
    if (flip_branch) p = -p;
    const Complex q = 0.5 * fj.d2 / (p * p * p);
    const Complex pinv = 1.0 / p;
    NullCurveMatrix m;
    m.a = p - fj.val * q;
    m.b = fj.val * (pinv + tau * q) - tau * p;
    m.c = -q;
    m.d = pinv + tau * q;
    return m;
}

HalfSpacePoint to_upper_half_space(const NullCurveMatrix& m) {
    const double den = std::norm(m.c) + std::norm(m.d);
    if (!(den > 1e-300)) throw InvalidMatrix("projection denominator underflow");
    const Complex xy = (m.a * std::conj(m.c) + m.b * std::conj(m.d)) / den;
    HalfSpacePoint p{xy.real(), xy.imag(), 1.0 / den};
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
        throw InvalidMatrix("non-finite half-space point");
    return p;
}

SurfaceGrid small_grid(const HoloExpr& e, const GridDomain& domain) {
    return fill_grid(e, domain, "small", [](const Jet2& fj, Complex tau) {
        return to_upper_half_space(small_matrix(fj, tau));
    });
}

}  // namespace bicalo
