#include <doctest.h>

#include <cmath>

#include "bicalo/jet.hpp"
#include "bicalo/expr.hpp"
#include "support.hpp"

using namespace bicalo;
using bicalo::testing::close;

namespace {

bool jet_close(const Jet2& a, const Jet2& b, double tol) {
    return close(a.val, b.val, tol) && close(a.d1, b.d1, tol) && close(a.d2, b.d2, tol);
}

}  // namespace

TEST_CASE("seed jets") {
    const Jet2 v = jet_var({2.0, -1.0});
    CHECK(v.val == Complex{2.0, -1.0});
    CHECK(v.d1 == Complex{1.0, 0.0});
    CHECK(v.d2 == Complex{0.0, 0.0});
}

TEST_CASE("compose rules match the known identities") {
    const Jet2 t2{{1, 0}, {2, 0}, {2, 0}};  // tau^2 at tau=1

    SUBCASE("mul: (tau^2)^2 = tau^4 at 1") {
        const Jet2 r = jet_compose(t2, t2, JetOp::mul);
        CHECK(r.val == Complex{1, 0});
        CHECK(r.d1 == Complex{4, 0});
        CHECK(r.d2 == Complex{12, 0});
    }
    SUBCASE("add with the zero jet is the identity") {
        const Jet2 r = jet_compose(t2, jet_const({0, 0}), JetOp::add);
        CHECK(jet_close(r, t2, 0.0));
    }
    SUBCASE("a jet divided by itself is the constant 1") {
        const Jet2 r = jet_compose(t2, t2, JetOp::div);
        CHECK(jet_close(r, jet_const({1, 0}), 1e-15));
    }
    SUBCASE("division by a zero-valued jet") {
        CHECK_THROWS_AS(jet_compose(t2, jet_const({0, 0}), JetOp::div), DomainError);
    }
}

TEST_CASE("eval_jet spot values") {
    CHECK(jet_close(eval_jet(parse("tau^2"), {1, 0}), {{1, 0}, {2, 0}, {2, 0}}, 0.0));
    CHECK(jet_close(eval_jet(parse("exp(tau)"), {0, 0}), {{1, 0}, {1, 0}, {1, 0}}, 0.0));
    CHECK(jet_close(eval_jet(parse("log(tau)"), {1, 0}), {{0, 0}, {1, 0}, {-1, 0}}, 0.0));
}

TEST_CASE("integer powers evaluate at a zero base") {
    CHECK(jet_close(eval_jet(parse("tau^2"), {0, 0}), {{0, 0}, {0, 0}, {2, 0}}, 0.0));
    CHECK(jet_close(eval_jet(parse("tau^3"), {0, 0}), {{0, 0}, {0, 0}, {0, 0}}, 0.0));
    CHECK(jet_close(eval_jet(parse("tau^1"), {0, 0}), {{0, 0}, {1, 0}, {0, 0}}, 0.0));
    CHECK(eval_jet(parse("tau^0"), {0, 0}).val == Complex{1, 0});
}

TEST_CASE("domain errors are raised eagerly at the offending node") {
    CHECK_THROWS_AS(eval_jet(parse("log(tau)"), {0, 0}), DomainError);
    CHECK_THROWS_AS(eval_jet(parse("log(tau)"), {-1, 0}), DomainError);
    CHECK_THROWS_AS(eval_jet(parse("sqrt(tau)"), {0, 0}), DomainError);
    CHECK_THROWS_AS(eval_jet(parse("sqrt(tau)"), {-4, 0}), DomainError);
    CHECK_THROWS_AS(eval_jet(parse("1/tau"), {0, 0}), DomainError);
    CHECK_THROWS_AS(eval_jet(parse("tau^-2"), {0, 0}), DomainError);
    CHECK_THROWS_AS(eval_jet(parse("tau^0.5"), {0, 0}), DomainError);
    CHECK_THROWS_AS(eval_jet(parse("tau^tau"), {0, 0}), DomainError);
    // Overflow is reported as a domain error, not NaN propagation.
    CHECK_THROWS_AS(eval_jet(parse("exp(tau)"), {1e4, 0}), DomainError);
}

TEST_CASE("elementary function jets at a generic complex point") {
    const Complex t{0.3, 0.2};
    const Jet2 s = eval_jet(parse("sin(tau)"), t);
    CHECK(close(s.val, std::sin(t), 1e-15));
    CHECK(close(s.d1, std::cos(t), 1e-15));
    CHECK(close(s.d2, -std::sin(t), 1e-15));

    const Jet2 th = eval_jet(parse("tanh(tau)"), t);
    const Complex c = std::cosh(t);
    CHECK(close(th.val, std::tanh(t), 1e-15));
    CHECK(close(th.d1, 1.0 / (c * c), 1e-14));

    const Jet2 q = eval_jet(parse("sqrt(tau)"), t);
    CHECK(close(q.val * q.val, t, 1e-15));
    CHECK(close(q.d1, 0.5 / std::sqrt(t), 1e-15));
}

TEST_CASE("derivative consistency against central differences") {
    const double h = 1e-5;
    const std::vector<std::string> exprs = {
        "tau^2", "log(tau)", "exp(tau)", "tau^3+tau",
        "sin(tau)*cosh(tau)", "1/(tau+3)", "exp(tau^2)/tau", "sqrt(tau)", "tan(tau/2)"};
    for (const auto& src : exprs) {
        const HoloExpr e = parse(src);
        bicalo::testing::TauSampler sample(42);
        for (int k = 0; k < 100; ++k) {
            const Complex t = sample();
            const Jet2 j = eval_jet(e, t);
            const Complex d1_fd =
                (eval_jet(e, t + h).val - eval_jet(e, t - h).val) / (2.0 * h);
            CAPTURE(src);
            CAPTURE(t);
            CHECK(std::abs(j.d1 - d1_fd) / (1.0 + std::abs(j.d1)) < 1e-6);
            // Second derivative against the central difference of the first.
            const Complex d2_fd =
                (eval_jet(e, t + h).d1 - eval_jet(e, t - h).d1) / (2.0 * h);
            CHECK(std::abs(j.d2 - d2_fd) / (1.0 + std::abs(j.d2)) < 1e-6);
        }
    }
}

TEST_CASE("exp(log(tau)) is the identity jet on the right half-plane") {
    const HoloExpr lhs = parse("exp(log(tau))");
    const HoloExpr rhs = parse("tau");
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(0.1, 3.0), im(-3.0, 3.0);
    for (int k = 0; k < 50; ++k) {
        const Complex t{re(rng), im(rng)};
        const Jet2 a = eval_jet(lhs, t);
        const Jet2 b = eval_jet(rhs, t);
        CHECK(jet_close(a, b, 1e-12));
    }
}
