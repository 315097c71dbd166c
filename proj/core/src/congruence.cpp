#include "bicalo/congruence.hpp"

#include <cmath>

namespace bicalo {

namespace {

constexpr double kZeroDerivativeTol = 1e-14;
constexpr double kTangencySlack = 1e-12;

// R_u = u|f'| + (1+|tau|^2)/(2|f'|) Re(f' conj(f'')),
// R_v = v|f'| + (1+|tau|^2)/(2|f'|) Im(f' conj(f'')).
void calo_radius_partials(const Jet2& fj, Complex tau, double& R_u, double& R_v) {
    const double ap = std::abs(fj.d1);
    const Complex w = fj.d1 * std::conj(fj.d2);
    const double c = (1.0 + std::norm(tau)) / (2.0 * ap);
    R_u = tau.real() * ap + c * w.real();
    R_v = tau.imag() * ap + c * w.imag();
}

Vec3 s_tilde_point(const Jet2& fj, Complex tau) {
    const double ap = std::abs(fj.d1);
    return {ap * tau.real(), ap * tau.imag(), ap * (std::norm(tau) - 1.0) / 2.0};
}

}  // namespace

MetricData metric_data(const CongruenceSample& s) {
    MetricData m;
    m.g11 = dot(s.X_u, s.X_u);
    m.g12 = dot(s.X_u, s.X_v);
    m.g22 = dot(s.X_v, s.X_v);
    const Vec3 c = cross(s.X_u, s.X_v);
    const double cn = norm(c);
    if (cn < 1e-14 * norm(s.X_u) * norm(s.X_v))
        throw DegenerateChart("surface of centers is rank deficient");
    const double det = m.g11 * m.g22 - m.g12 * m.g12;
    m.A11 = m.g22 / det;
    m.A12 = -m.g12 / det;
    m.A22 = m.g11 / det;
    m.N = c / cn;
    return m;
}

double delta1_r(const CongruenceSample& s, const MetricData& m) {
    double d = s.R_u * s.R_u * m.A11 + 2.0 * s.R_u * s.R_v * m.A12 + s.R_v * s.R_v * m.A22;
    if (d > 1.0 && d <= 1.0 + kTangencySlack) d = 1.0;
    return d;
}

Vec3 envelope(const CongruenceSample& s, EnvelopeSign sign) {
    const MetricData m = metric_data(s);
    const double d1r = delta1_r(s, m);
    if (d1r > 1.0) throw NoRealEnvelope("Delta_1 R > 1: no real envelope");
    const double a = s.R_u * m.A11 + s.R_v * m.A12;
    const double b = s.R_u * m.A12 + s.R_v * m.A22;
    const Vec3 delta = a * s.X_u + b * s.X_v;
    const double c = std::sqrt(1.0 - d1r);
    const Vec3 nu = sign == EnvelopeSign::plus ? delta + c * m.N : delta - c * m.N;
    return s.X - s.R * nu;
}

BeltramiAngles beltrami_angles(const CongruenceSample& s) {
    const MetricData m = metric_data(s);
    const double d1r = delta1_r(s, m);
    if (d1r > 1.0) throw NoRealEnvelope("Delta_1 R > 1: no real envelope");
    return {s.R_u / std::sqrt(m.g11), s.R_v / std::sqrt(m.g22), std::sqrt(1.0 - d1r)};
}

double calo_radius(const Jet2& fj, Complex tau) {
    return (1.0 + std::norm(tau)) / 2.0 * std::abs(fj.d1);
}

CaloPairSample calo_pair(const Jet2& fj, Complex tau) {
    if (std::abs(fj.d1) < kZeroDerivativeTol) throw ZeroDerivative("f'(tau) ~ 0");
    const double R = calo_radius(fj, tau);
    return {tau, s_tilde_point(fj, tau), {fj.val.real(), fj.val.imag(), R}, R};
}

CongruenceSample calo_congruence_sample(const HoloExpr& e, Complex tau, CaloSurface which) {
    const Jet2 fj = eval_jet(e, tau);
    if (std::abs(fj.d1) < kZeroDerivativeTol) throw ZeroDerivative("f'(tau) ~ 0");

    CongruenceSample s;
    s.R = calo_radius(fj, tau);
    calo_radius_partials(fj, tau, s.R_u, s.R_v);

    if (which == CaloSurface::support) {
        s.X = {fj.val.real(), fj.val.imag(), s.R};
        // X_u = (Re f', Im f', R_u); X_v = (-Im f', Re f', R_v) by
        // Cauchy-Riemann.
        s.X_u = {fj.d1.real(), fj.d1.imag(), s.R_u};
        s.X_v = {-fj.d1.imag(), fj.d1.real(), s.R_v};
        return s;
    }

    s.X = s_tilde_point(fj, tau);
    const double h = 1e-6 * (1.0 + std::abs(tau));
    const Vec3 xp_u = s_tilde_point(eval_jet(e, tau + h), tau + h);
    const Vec3 xm_u = s_tilde_point(eval_jet(e, tau - h), tau - h);
    const Complex ih{0.0, h};
    const Vec3 xp_v = s_tilde_point(eval_jet(e, tau + ih), tau + ih);
    const Vec3 xm_v = s_tilde_point(eval_jet(e, tau - ih), tau - ih);
    s.X_u = (xp_u - xm_u) / (2.0 * h);
    s.X_v = (xp_v - xm_v) / (2.0 * h);
    return s;
}

}  // namespace bicalo
