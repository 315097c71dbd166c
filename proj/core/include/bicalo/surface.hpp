#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bicalo/errors.hpp"
#include "bicalo/expr.hpp"
#include "bicalo/jet.hpp"
#include "bicalo/vec3.hpp"

namespace bicalo {

// Point in the upper half-space model {z > 0} of hyperbolic 3-space.
struct HalfSpacePoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 vec() const { return {x, y, z}; }
};

// Annular parameter domain tau = r e^{i theta}. r is sampled inclusively
// with n_r points; theta is sampled half-open with step
// (theta_max - theta_min) / n_theta, so a full-turn range has no duplicate
// seam column. theta_max - theta_min may exceed 2*pi (multi-sheet domains).
struct GridDomain {
    double r_min = 0.5;
    double r_max = 2.0;
    double theta_min = 0.0;
    double theta_max = 6.283185307179586;
    int n_r = 64;
    int n_theta = 64;

    double r_step() const { return (r_max - r_min) / (n_r - 1); }
    double theta_step() const { return (theta_max - theta_min) / n_theta; }
    double r_at(int i) const { return r_min + i * r_step(); }
    double theta_at(int j) const { return theta_min + j * theta_step(); }
};

// Sampled parametric surface over a grid in tau, row-major with r as the
// slow index. Nodes where evaluation failed (f' = 0, branch point, ...)
// are holes; every non-hole node has z > 0. `fval` holds the f value used
// at the node, continued in theta across log-type branch cuts so that
// multi-sheet domains sample the Riemann surface rather than folding back
// to the principal branch.
struct SurfaceGrid {
    GridDomain domain;
    std::string tag;  // "bianchi" | "small"
    std::vector<Complex> tau;
    std::vector<Complex> fval;
    std::vector<HalfSpacePoint> points;
    std::vector<std::uint8_t> hole;
    int hole_count = 0;

    int size() const { return domain.n_r * domain.n_theta; }
    int index(int i, int j) const { return i * domain.n_theta + j; }
    bool is_hole(int i, int j) const { return hole[index(i, j)] != 0; }
    const HalfSpacePoint& at(int i, int j) const { return points[index(i, j)]; }
};

// Per-node surface evaluation: consumes the (branch-continued) jet of f at
// tau. Throwing ZeroDerivative, DomainError, or InvalidMatrix marks the
// node as a hole.
using PointFn = std::function<HalfSpacePoint(const Jet2& fj, Complex tau)>;

// Evaluates fn over the domain. Within each constant-r row the f value is
// analytically continued in theta: the next value is predicted from the
// previous node by a trapezoid step of f', and a 2*pi*i multiple is added
// to the principal value when that matches the prediction (log-type
// monodromy). Throws EmptyGrid when every node is a hole.
SurfaceGrid fill_grid(const HoloExpr& e, const GridDomain& domain, std::string tag,
                      const PointFn& fn);

}  // namespace bicalo
