#include "bicalo/bianchi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bicalo {

namespace {

constexpr double kZeroDerivativeTol = 1e-14;

}  // namespace

double bicalo_denominator(const Jet2& fj, Complex tau) {
    const double ap2 = std::norm(fj.d1);
    const double cross = (fj.d1 * std::conj(fj.d2) * std::conj(tau)).real();
    return ap2 + cross + std::norm(fj.d2) * (std::norm(tau) + 1.0) / 4.0;
}

HalfSpacePoint bianchi_calo_point(const Jet2& fj, Complex tau) {
    const double ap = std::abs(fj.d1);
    if (ap < kZeroDerivativeTol) throw ZeroDerivative("f'(tau) ~ 0");
    const double D = bicalo_denominator(fj, tau);
    if (!(D > 0.0) || !std::isfinite(D)) throw ZeroDerivative("degenerate denominator");
    const double ap2 = ap * ap;
    const Complex ft = fj.d1 * tau;
    const Complex p2fb = fj.d1 * fj.d1 * std::conj(fj.d2);
    const double half_rho = (1.0 + std::norm(tau)) / 2.0;
    HalfSpacePoint p;
    p.x = fj.val.real() - (ap2 * ft.real() + half_rho * p2fb.real()) / D;
    p.y = fj.val.imag() - (ap2 * ft.imag() + half_rho * p2fb.imag()) / D;
    p.z = ap2 * ap / D;
    return p;
}

SurfaceGrid bicalo_grid(const HoloExpr& e, const GridDomain& domain) {
    return fill_grid(e, domain, "bianchi",
                     [](const Jet2& fj, Complex tau) { return bianchi_calo_point(fj, tau); });
}

ImageBounds grid_image_bounds(const SurfaceGrid& g) {
    ImageBounds b;
    constexpr double inf = std::numeric_limits<double>::infinity();
    b.min = {inf, inf, inf};
    b.max = {-inf, -inf, -inf};
    Vec3 sum{};
    int count = 0;
    for (int idx = 0; idx < g.size(); ++idx) {
        if (g.hole[idx]) continue;
        const Vec3 p = g.points[idx].vec();
        b.min = {std::min(b.min.x, p.x), std::min(b.min.y, p.y), std::min(b.min.z, p.z)};
        b.max = {std::max(b.max.x, p.x), std::max(b.max.y, p.y), std::max(b.max.z, p.z)};
        sum = sum + p;
        ++count;
    }
    if (count == 0) throw EmptyGrid("no non-hole nodes");
    b.centroid = sum / count;
    return b;
}

Degeneracy degeneracy_classify(const SurfaceGrid& g) {
    int valid = g.size() - g.hole_count;
    if (valid < 4) throw EmptyGrid("fewer than 4 non-hole nodes");

    const ImageBounds b = grid_image_bounds(g);
    if (b.diameter() < 1e-10 * (1.0 + norm(b.centroid))) return Degeneracy::point_degenerate;

    const double dr = g.domain.r_step();
    const double dt = g.domain.theta_step();
    int tested = 0;
    bool all_rank2 = true;
    for (int i = 1; i + 1 < g.domain.n_r; ++i) {
        for (int j = 1; j + 1 < g.domain.n_theta; ++j) {
            if (g.is_hole(i, j) || g.is_hole(i - 1, j) || g.is_hole(i + 1, j) ||
                g.is_hole(i, j - 1) || g.is_hole(i, j + 1))
                continue;
            ++tested;
            const Vec3 ju = (g.at(i + 1, j).vec() - g.at(i - 1, j).vec()) / (2.0 * dr);
            const Vec3 jv = (g.at(i, j + 1).vec() - g.at(i, j - 1).vec()) / (2.0 * dt);
            // Singular values of the 3x2 Jacobian from the eigenvalues of
            // J^T J.
            const double a = dot(ju, ju), bb = dot(ju, jv), c = dot(jv, jv);
            const double mean = 0.5 * (a + c);
            const double disc = std::sqrt(0.25 * (a - c) * (a - c) + bb * bb);
            const double smax = std::sqrt(std::max(mean + disc, 0.0));
            const double smin = std::sqrt(std::max(mean - disc, 0.0));
            if (!(smin > 1e-8 * smax)) {
                all_rank2 = false;
                break;
            }
        }
        if (!all_rank2) break;
    }
    // Without a single testable interior node rank cannot be certified.
    if (tested == 0 || !all_rank2) return Degeneracy::mixed;
    return Degeneracy::immersed;
}

HalfSpacePoint bicalo_via_congruence(const HoloExpr& e, Complex tau) {
    const CongruenceSample s = calo_congruence_sample(e, tau, CaloSurface::support);
    const Vec3 xi = envelope(s, EnvelopeSign::minus);
    return {xi.x, xi.y, xi.z};
}

}  // namespace bicalo
