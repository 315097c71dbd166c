#include "bicalo/verify.hpp"

#include <cmath>
#include <limits>

#include "bicalo/bianchi.hpp"

namespace bicalo {

namespace {

bool full_stencil(const SurfaceGrid& g, int i, int j) {
    for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj)
            if (g.is_hole(i + di, j + dj)) return false;
    return true;
}

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

constexpr Complex kInvalid{std::numeric_limits<double>::quiet_NaN(),
                           std::numeric_limits<double>::quiet_NaN()};

// Gauss-map endpoint at every node where the forms stencil exists, with
// the CMC-1 orientation; NaN elsewhere.
std::vector<Complex> gauss_field(const SurfaceGrid& g) {
    std::vector<Complex> m(g.size(), kInvalid);
    for (int i = 1; i + 1 < g.domain.n_r; ++i) {
        for (int j = 1; j + 1 < g.domain.n_theta; ++j) {
            try {
                const FormsSample fs = fundamental_forms(g, i, j);
                const HalfSpacePoint& p = g.at(i, j);
                m[g.index(i, j)] = hyperbolic_gauss_map(p, cmc1_normal(fs, p.z));
            } catch (const Error&) {
            }
        }
    }
    return m;
}

}  // namespace

FormsSample fundamental_forms(const SurfaceGrid& g, int i, int j) {
    if (i < 1 || i + 1 >= g.domain.n_r || j < 1 || j + 1 >= g.domain.n_theta)
        throw BoundaryNode("node on grid boundary");
    if (!full_stencil(g, i, j)) throw BoundaryNode("hole in stencil neighborhood");

    const double dr = g.domain.r_step();
    const double dt = g.domain.theta_step();
    const Vec3 p = g.at(i, j).vec();
    const Vec3 pr = (g.at(i + 1, j).vec() - g.at(i - 1, j).vec()) / (2.0 * dr);
    const Vec3 pt = (g.at(i, j + 1).vec() - g.at(i, j - 1).vec()) / (2.0 * dt);
    const Vec3 prr = (g.at(i + 1, j).vec() - 2.0 * p + g.at(i - 1, j).vec()) / (dr * dr);
    const Vec3 ptt = (g.at(i, j + 1).vec() - 2.0 * p + g.at(i, j - 1).vec()) / (dt * dt);
    const Vec3 prt = (g.at(i + 1, j + 1).vec() - g.at(i + 1, j - 1).vec() -
                      g.at(i - 1, j + 1).vec() + g.at(i - 1, j - 1).vec()) /
                     (4.0 * dr * dt);

    FormsSample fs;
    fs.E = dot(pr, pr);
    fs.F = dot(pr, pt);
    fs.G = dot(pt, pt);
    const Vec3 c = cross(pr, pt);
    const double cn = norm(c);
    const double det = fs.E * fs.G - fs.F * fs.F;
    if (!(det > 0.0) || cn == 0.0) throw DegenerateChart("EG - F^2 <= 0 at node");
    fs.normal = c / cn;
    fs.L = dot(prr, fs.normal);
    fs.M = dot(prt, fs.normal);
    fs.N2 = dot(ptt, fs.normal);
    fs.h_euclid = (fs.G * fs.L - 2.0 * fs.F * fs.M + fs.E * fs.N2) / (2.0 * det);
    return fs;
}

double hyperbolic_mean_curvature(const FormsSample& fs, double z) {
    return std::abs(z * fs.h_euclid + fs.normal.z);
}

Vec3 cmc1_normal(const FormsSample& fs, double z) {
    const double h1 = z * fs.h_euclid + fs.normal.z;
    return h1 < 0.0 ? -fs.normal : fs.normal;
}

Complex hyperbolic_gauss_map(const HalfSpacePoint& p, const Vec3& n) {
    if (n.z >= 1.0 - 1e-12) throw VerticalEscape("normal geodesic escapes vertically");
    const double s = p.z / (1.0 - n.z);
    return {p.x + s * n.x, p.y + s * n.y};
}

double conformality_defect(const SurfaceGrid& g, std::span<const Complex> reference) {
    const std::vector<Complex> m = gauss_field(g);
    double worst = -1.0;
    for (int i = 1; i + 1 < g.domain.n_r; ++i) {
        for (int j = 1; j + 1 < g.domain.n_theta; ++j) {
            const int c = g.index(i, j);
            const int im = g.index(i - 1, j), ip = g.index(i + 1, j);
            const int jm = g.index(i, j - 1), jp = g.index(i, j + 1);
            if (!finite(m[c]) || !finite(m[im]) || !finite(m[ip]) || !finite(m[jm]) ||
                !finite(m[jp]))
                continue;
            if (!finite(reference[im]) || !finite(reference[ip]) || !finite(reference[jm]) ||
                !finite(reference[jp]))
                continue;
            const Complex mr = m[ip] - m[im], mt = m[jp] - m[jm];
            const Complex wr = reference[ip] - reference[im];
            const Complex wt = reference[jp] - reference[jm];
            // Solve m_r = m_w w_r + m_wb conj(w)_r (same in theta); the
            // common 1/(2 step) factors cancel.
            const Complex wbr = std::conj(reference[ip]) - std::conj(reference[im]);
            const Complex wbt = std::conj(reference[jp]) - std::conj(reference[jm]);
            const Complex det = wr * wbt - wbr * wt;
            if (std::abs(det) < 1e-300) continue;
            const Complex mw = (mr * wbt - wbr * mt) / det;
            const Complex mwb = (wr * mt - mr * wt) / det;
            const double defect = std::abs(mwb) / (std::abs(mw) + std::abs(mwb) + 1e-300);
            worst = std::max(worst, defect);
        }
    }
    if (worst < 0.0) throw EmptyGrid("no node with a full conformality stencil");
    return worst;
}

double conformality_defect(const SurfaceGrid& g,
                           const std::function<Complex(Complex)>& reference) {
    std::vector<Complex> ref(g.size(), kInvalid);
    for (int idx = 0; idx < g.size(); ++idx) {
        try {
            ref[idx] = reference(g.tau[idx]);
        } catch (const Error&) {
        }
    }
    return conformality_defect(g, ref);
}

VerificationReport verify_grid(const SurfaceGrid& g, const VerifyTolerances& tol) {
    if (degeneracy_classify(g) == Degeneracy::point_degenerate)
        throw EmptyGrid("image degenerates to a point");

    VerificationReport rep;
    rep.grid_id = g.tag + " " + std::to_string(g.domain.n_r) + "x" +
                  std::to_string(g.domain.n_theta);
    rep.hole_count = g.hole_count;

    int checked = 0;
    for (int i = 1; i + 1 < g.domain.n_r; ++i) {
        for (int j = 1; j + 1 < g.domain.n_theta; ++j) {
            try {
                const FormsSample fs = fundamental_forms(g, i, j);
                const HalfSpacePoint& p = g.at(i, j);
                const double h = hyperbolic_mean_curvature(fs, p.z);
                rep.max_h_deviation = std::max(rep.max_h_deviation, std::abs(h - 1.0));
                const Complex gm = hyperbolic_gauss_map(p, cmc1_normal(fs, p.z));
                const Complex f = g.fval[g.index(i, j)];
                if (finite(f))
                    rep.max_gauss_residual =
                        std::max(rep.max_gauss_residual, std::abs(gm - f));
                ++checked;
            } catch (const Error&) {
            }
        }
    }
    if (checked == 0) throw EmptyGrid("no checkable interior node");
    rep.max_conformality_defect = conformality_defect(g, std::span<const Complex>(g.fval));

    rep.checks = {
        {"h_mean_curvature", rep.max_h_deviation, tol.h_mean_curvature,
         rep.max_h_deviation < tol.h_mean_curvature},
        {"gauss_map", rep.max_gauss_residual, tol.gauss_map,
         rep.max_gauss_residual < tol.gauss_map},
        {"conformality", rep.max_conformality_defect, tol.conformality,
         rep.max_conformality_defect < tol.conformality},
    };
    return rep;
}

}  // namespace bicalo
