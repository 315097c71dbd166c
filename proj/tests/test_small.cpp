#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "bicalo/bianchi.hpp"
#include "bicalo/small.hpp"
#include "support.hpp"

using namespace bicalo;
using bicalo::testing::close;

TEST_CASE("f = tau gives the identity matrix") {
    const HoloExpr e = parse("tau");
    for (Complex t : {Complex{0.2, 0.4}, Complex{-1.0, 2.0}, Complex{3.0, 0.0}}) {
        const NullCurveMatrix m = small_matrix(eval_jet(e, t), t);
        CHECK(m.a == Complex{1, 0});
        CHECK(m.b == Complex{0, 0});
        CHECK(m.c == Complex{0, 0});
        CHECK(m.d == Complex{1, 0});
        const HalfSpacePoint p = to_upper_half_space(m);
        CHECK(p.x == 0.0);
        CHECK(p.y == 0.0);
        CHECK(p.z == 1.0);
    }
}

TEST_CASE("matrix entries for f = tau^2 at tau = 1") {
    const NullCurveMatrix m = small_matrix(eval_jet(parse("tau^2"), {1, 0}), {1, 0});
    const double s = 1.0 / (2.0 * std::sqrt(2.0));
    CHECK(close(m.a, Complex{3.0 * s, 0}, 1e-15));
    CHECK(close(m.b, Complex{-s, 0}, 1e-15));
    CHECK(close(m.c, Complex{-s, 0}, 1e-15));
    CHECK(close(m.d, Complex{3.0 * s, 0}, 1e-15));
    CHECK(close(m.det(), Complex{1, 0}, 1e-15));

    const HalfSpacePoint p = to_upper_half_space(m);
    CHECK(p.x == doctest::Approx(-0.6).epsilon(1e-14));
    CHECK(p.y == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(p.z == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("unit determinant across the catalog") {
    CHECK(close(small_matrix(eval_jet(parse("log(tau)"), {2, 0}), {2, 0}).det(), Complex{1, 0},
                1e-12));
    for (const auto& src : bicalo::testing::catalog()) {
        const HoloExpr e = parse(src);
        bicalo::testing::TauSampler sample(17);
        for (int k = 0; k < 50; ++k) {
            const Complex t = sample.away_from_critical(e);
            const NullCurveMatrix m = small_matrix(eval_jet(e, t), t);
            CAPTURE(src);
            CHECK(close(m.det(), Complex{1, 0}, 1e-10));
        }
    }
}

TEST_CASE("projection is invariant under omega -> -omega") {
    const NullCurveMatrix m = small_matrix(eval_jet(parse("exp(tau)"), {0.4, 0.9}), {0.4, 0.9});
    const NullCurveMatrix neg{-m.a, -m.b, -m.c, -m.d};
    const HalfSpacePoint p = to_upper_half_space(m);
    const HalfSpacePoint q = to_upper_half_space(neg);
    CHECK(p.x == q.x);
    CHECK(p.y == q.y);
    CHECK(p.z == q.z);
}

TEST_CASE("square-root branch flip leaves the half-space point bit-identical") {
    for (const auto& src : bicalo::testing::catalog()) {
        const HoloExpr e = parse(src);
        bicalo::testing::TauSampler sample(23);
        for (int k = 0; k < 30; ++k) {
            const Complex t = sample.away_from_critical(e);
            const Jet2 fj = eval_jet(e, t);
            const HalfSpacePoint p = to_upper_half_space(small_matrix(fj, t, false));
            const HalfSpacePoint q = to_upper_half_space(small_matrix(fj, t, true));
            CHECK(std::memcmp(&p, &q, sizeof p) == 0);
        }
    }
}

TEST_CASE("small_grid") {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    SUBCASE("f = tau^2 annulus") {
        const SurfaceGrid g = small_grid(parse("tau^2"), {0.5, 2.0, 0.0, kTwoPi, 8, 8});
        CHECK(g.tag == "small");
        CHECK(g.hole_count == 0);
        for (int idx = 0; idx < g.size(); ++idx) CHECK(g.points[idx].z > 0.0);
    }
    SUBCASE("f = tau maps every node to (0,0,1)") {
        const SurfaceGrid g = small_grid(parse("tau"), {0.5, 2.0, 0.0, kTwoPi, 4, 4});
        for (int idx = 0; idx < g.size(); ++idx) {
            CHECK(g.points[idx].x == 0.0);
            CHECK(g.points[idx].z == 1.0);
        }
    }
    SUBCASE("f' zeros become holes") {
        const SurfaceGrid g = small_grid(parse("tau^2"), {0.0, 1.0, 0.0, kTwoPi, 8, 8});
        CHECK(g.hole_count == 8);
    }
}

TEST_CASE("the two routes agree pointwise") {
    for (const auto& src : bicalo::testing::catalog()) {
        const HoloExpr e = parse(src);
        bicalo::testing::TauSampler sample(41);
        for (int k = 0; k < 50; ++k) {
            const Complex t = sample.away_from_critical(e);
            const Jet2 fj = eval_jet(e, t);
            const HalfSpacePoint a = bianchi_calo_point(fj, t);
            const HalfSpacePoint b = to_upper_half_space(small_matrix(fj, t));
            CAPTURE(src);
            CAPTURE(t);
            CHECK(norm(a.vec() - b.vec()) < 1e-9);
        }
    }
}
