#pragma once

#include "bicalo/congruence.hpp"
#include "bicalo/surface.hpp"

namespace bicalo {

// Denominator of the explicit parametrization:
//   D = |f'|^2 + Re(f' conj(f'') conj(tau)) + |f''|^2 (|tau|^2 + 1)/4.
// Equals (|f'|^2 + |grad R|^2)/(|tau|^2 + 1), hence positive wherever
// f'(tau) != 0.
double bicalo_denominator(const Jet2& fj, Complex tau);

// The explicit CMC-1 point in the upper half-space model:
//   x = Re f - [|f'|^2 Re(f' tau) + (1+|tau|^2)/2 Re((f')^2 conj(f''))]/D
//   y = likewise with Im
//   z = |f'|^3 / D.
// Throws ZeroDerivative when |f'| < 1e-14.
HalfSpacePoint bianchi_calo_point(const Jet2& fj, Complex tau);

// Samples bianchi_calo_point over the domain; nodes where f' vanishes or
// evaluation hits a singularity become holes.
SurfaceGrid bicalo_grid(const HoloExpr& e, const GridDomain& domain);

enum class Degeneracy { immersed, point_degenerate, mixed };

// point_degenerate: image diameter < 1e-10 (1 + |centroid|) (the f'' == 0
// family collapses to a single point). immersed: the finite-difference
// Jacobian has rank 2 (smallest/largest singular value > 1e-8) at every
// interior node with a full non-hole neighborhood. Throws EmptyGrid when
// fewer than 4 non-hole nodes exist.
Degeneracy degeneracy_classify(const SurfaceGrid& g);

// Axis-aligned bounds of the non-hole image, plus centroid.
struct ImageBounds {
    Vec3 min, max, centroid;
    double diameter() const { return norm(max - min); }
};
ImageBounds grid_image_bounds(const SurfaceGrid& g);

// The same point through the congruence engine: envelope(minus) of the
// support congruence. Oracle for the closed form.
HalfSpacePoint bicalo_via_congruence(const HoloExpr& e, Complex tau);

}  // namespace bicalo
