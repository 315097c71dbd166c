#pragma once

#include "bicalo/surface.hpp"

namespace bicalo {

// Null-curve matrix omega with unit determinant. Projecting by
// omega * conj(omega)^t gives the hermitian-model point; the half-space
// conversion below consumes the entries directly.
struct NullCurveMatrix {
    Complex a, b, c, d;

    Complex det() const { return a * d - b * c; }
};

// Entries with the Gauss-transform parameter fixed to tau: with
// p = (f')^{1/2} (principal branch) and q = f'' / (2 p^3),
//   a = p - f q,  b = f (1/p + tau q) - tau p,  c = -q,  d = 1/p + tau q.
// det is identically 1. flip_branch selects the other square root; after
// projection both branches give the same half-space point exactly.
NullCurveMatrix small_matrix(const Jet2& fj, Complex tau, bool flip_branch = false);

// x + iy = (a conj(c) + b conj(d)) / (|c|^2 + |d|^2), z = 1/(|c|^2 + |d|^2).
// Invariant under omega -> -omega. Throws InvalidMatrix on underflow or
// non-finite output.
HalfSpacePoint to_upper_half_space(const NullCurveMatrix& m);

// Samples the composite map over the domain, tagged "small".
SurfaceGrid small_grid(const HoloExpr& e, const GridDomain& domain);

}  // namespace bicalo
