#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bicalo/surface.hpp"

namespace bicalo {

// First and second fundamental forms at a grid node, from grid-spacing
// central differences. Sign convention: the unit sphere carries
// h_euclid = +1 with the inward normal.
struct FormsSample {
    double E, F, G;
    double L, M, N2;
    Vec3 normal;  // (X_u x X_v)/|X_u x X_v| in grid chart order (r, theta)
    double h_euclid;
};

// Requires an interior node whose full 3x3 neighborhood is non-hole
// (diagonals feed the mixed second derivative); throws BoundaryNode
// otherwise, and DegenerateChart when EG - F^2 <= 0.
FormsSample fundamental_forms(const SurfaceGrid& g, int i, int j);

// H_hyp = z h_euclid + normal_z, reported for the orientation (of the two)
// that makes it nonnegative.
double hyperbolic_mean_curvature(const FormsSample& fs, double z);

// The normal orientation selected by that convention (the CMC-1
// orientation).
Vec3 cmc1_normal(const FormsSample& fs, double z);

// Ideal endpoint of the geodesic leaving p in Euclidean direction n:
// G = (x + iy) + z (n_x + i n_y)/(1 - n_z). Throws VerticalEscape when
// n_z >= 1 - 1e-12.
Complex hyperbolic_gauss_map(const HalfSpacePoint& p, const Vec3& n);

// Maximum Cauchy-Riemann residual of the correspondence
// reference -> gauss-map endpoint over interior nodes, normalized by the
// local derivative magnitude: |m_wbar| / (|m_w| + |m_wbar|). All
// derivatives are grid finite differences. Throws EmptyGrid when no node
// has a full stencil of well-defined values.
double conformality_defect(const SurfaceGrid& g, std::span<const Complex> reference);
double conformality_defect(const SurfaceGrid& g,
                           const std::function<Complex(Complex)>& reference);

struct VerifyTolerances {
    double h_mean_curvature = 5e-4;
    double gauss_map = 1e-6;
    double conformality = 1e-4;
};

struct CheckResult {
    std::string name;
    double max_residual;
    double tolerance;
    bool pass;
};

struct VerificationReport {
    std::string grid_id;
    double max_h_deviation = 0.0;
    double max_gauss_residual = 0.0;
    double max_conformality_defect = 0.0;
    int hole_count = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Runs the H == 1, Gauss-map, and conformality checks over interior
// non-hole nodes, entirely from grid finite differences. The Gauss-map and
// conformality references use the branch-continued f values recorded in
// the grid. Throws EmptyGrid for point-degenerate grids and when no node
// is checkable.
VerificationReport verify_grid(const SurfaceGrid& g, const VerifyTolerances& tol = {});

}  // namespace bicalo
