#include "bicalo/surface.hpp"

#include <cmath>
#include <numbers>

namespace bicalo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Rounds the gap between the principal value and the path-continued
// prediction to a 2*pi*i multiple. Applied only when the rounded multiple
// explains the gap to within pi/4; anything else is either single-valued
// (k = 0) or a monodromy this sampler does not model.
Complex continued_value(Complex principal, Complex predicted) {
    const double gap = (predicted - principal).imag();
    const double k = std::nearbyint(gap / kTwoPi);
    if (k != 0.0 && std::abs(gap - k * kTwoPi) < std::numbers::pi / 4.0)
        return principal + Complex{0.0, k * kTwoPi};
    return principal;
}

}  // namespace

SurfaceGrid fill_grid(const HoloExpr& e, const GridDomain& domain, std::string tag,
                      const PointFn& fn) {
    SurfaceGrid g;
    g.domain = domain;
    g.tag = std::move(tag);
    const int n = domain.n_r * domain.n_theta;
    g.tau.resize(n);
    g.fval.assign(n, Complex{std::nan(""), std::nan("")});
    g.points.assign(n, HalfSpacePoint{});
    g.hole.assign(n, 1);
    g.hole_count = 0;

    for (int i = 0; i < domain.n_r; ++i) {
        const double r = domain.r_at(i);
        bool have_prev = false;
        Complex prev_tau{}, prev_val{}, prev_d1{};
        for (int j = 0; j < domain.n_theta; ++j) {
            const double theta = domain.theta_at(j);
            const Complex tau = std::polar(r, theta);
            const int idx = g.index(i, j);
            g.tau[idx] = tau;
            try {
                Jet2 fj = eval_jet(e, tau);
                if (have_prev) {
                    const Complex predicted =
                        prev_val + 0.5 * (prev_d1 + fj.d1) * (tau - prev_tau);
                    fj.val = continued_value(fj.val, predicted);
                }
                have_prev = true;
                prev_tau = tau;
                prev_val = fj.val;
                prev_d1 = fj.d1;
                g.fval[idx] = fj.val;
                g.points[idx] = fn(fj, tau);
                g.hole[idx] = 0;
            } catch (const DomainError&) {
            } catch (const ZeroDerivative&) {
            } catch (const InvalidMatrix&) {
            }
        }
    }
    for (const std::uint8_t h : g.hole) g.hole_count += h;
    if (g.hole_count == n) throw EmptyGrid("every grid node is a hole");
    return g;
}

}  // namespace bicalo
