#pragma once

#include <complex>

#include "bicalo/expr.hpp"
#include "bicalo/jet.hpp"
#include "bicalo/vec3.hpp"

namespace bicalo {

// One sample of a two-parameter congruence of spheres: the surface of
// centers X(u,v) with its first partials, and the radius function R with
// its partials.
struct CongruenceSample {
    Vec3 X;
    Vec3 X_u;
    Vec3 X_v;
    double R = 0.0;
    double R_u = 0.0;
    double R_v = 0.0;
};

// First fundamental form g of the surface of centers, its inverse A, and
// the unit normal N = (X_u x X_v)/|X_u x X_v|.
struct MetricData {
    double g11, g12, g22;
    double A11, A12, A22;
    Vec3 N;
};

// Cosines of the angles between the envelope direction nu and X_u, X_v, N.
// cos_sigma = sqrt(1 - Delta_1 R) >= 0 by construction.
struct BeltramiAngles {
    double cos_w1;
    double cos_w2;
    double cos_sigma;
};

// One sample of the isometric pair built from a holomorphic f: the rolled
// surface S_tilde (|S_tilde|^2 = S.z^2) and the support surface S in the
// upper half-space, sharing the radius R.
struct CaloPairSample {
    Complex tau;
    Vec3 s_tilde;
    Vec3 s;
    double R;
};

enum class EnvelopeSign { plus, minus };
enum class CaloSurface { support, rolled };

// Throws DegenerateChart when |X_u x X_v| < 1e-14 |X_u||X_v|.
MetricData metric_data(const CongruenceSample& s);

// Delta_1 R = R_u^2 A11 + 2 R_u R_v A12 + R_v^2 A22. Values in
// (1, 1 + 1e-12] are clamped to 1 (tangential envelope); larger values
// throw NoRealEnvelope from the envelope routines.
double delta1_r(const CongruenceSample& s, const MetricData& m);

// Envelope point xi = X - R (Delta(X,R) +- sqrt(1 - Delta_1 R) N).
// The plus branch of a Calo congruence is the plane {z = 0}; the minus
// branch is the CMC-1 surface.
Vec3 envelope(const CongruenceSample& s, EnvelopeSign sign);

BeltramiAngles beltrami_angles(const CongruenceSample& s);

// R = (1 + |tau|^2)/2 * |f'(tau)|. Zero when f' vanishes; consumers that
// need R > 0 reject such points themselves.
double calo_radius(const Jet2& fj, Complex tau);

// S_tilde = |f'| ((tau+conj tau)/2, (tau-conj tau)/(2i), (|tau|^2-1)/2),
// S = (Re f, Im f, R). Throws ZeroDerivative when |f'| < 1e-14.
CaloPairSample calo_pair(const Jet2& fj, Complex tau);

// Packages either surface of the pair as a congruence sample with the
// shared radius function. Support-surface partials are analytic from the
// jet; rolled-surface partials use central differences with step
// h = 1e-6 (1 + |tau|), since |f'| is not holomorphic.
CongruenceSample calo_congruence_sample(const HoloExpr& e, Complex tau, CaloSurface which);

}  // namespace bicalo
