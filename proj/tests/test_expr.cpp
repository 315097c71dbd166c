#include <doctest.h>

#include <random>

#include "bicalo/expr.hpp"
#include "support.hpp"

using namespace bicalo;
using Kind = HoloExpr::Kind;
using Builtin = HoloExpr::Builtin;

TEST_CASE("grammar structure") {
    SUBCASE("tau^2 is Pow(Var, Const 2)") {
        const HoloExpr expected = HoloExpr::binary(Kind::pow, HoloExpr::variable(),
                                                   HoloExpr::constant({2, 0}));
        CHECK(ast_equal(parse("tau^2"), expected));
    }
    SUBCASE("log(tau)") {
        CHECK(ast_equal(parse("log(tau)"), HoloExpr::call(Builtin::log, HoloExpr::variable())));
    }
    SUBCASE("precedence: term over expr") {
        CHECK(ast_equal(parse("tau+tau*tau"), parse("tau+(tau*tau)")));
        CHECK(!ast_equal(parse("tau+tau*tau"), parse("(tau+tau)*tau")));
    }
    SUBCASE("left associativity of sub and div") {
        CHECK(ast_equal(parse("tau-1-2"), parse("(tau-1)-2")));
        CHECK(ast_equal(parse("tau/2/3"), parse("(tau/2)/3")));
    }
    SUBCASE("^ is right-associative") {
        CHECK(ast_equal(parse("tau^2^3"), parse("tau^(2^3)")));
    }
    SUBCASE("unary minus binds looser than ^") {
        CHECK(ast_equal(parse("-tau^2"), parse("-(tau^2)")));
        CHECK(!ast_equal(parse("-tau^2"), parse("(-tau)^2")));
    }
    SUBCASE("negated exponent") {
        CHECK(ast_equal(parse("tau^-2"),
                        HoloExpr::binary(Kind::pow, HoloExpr::variable(),
                                         HoloExpr::negate(HoloExpr::constant({2, 0})))));
    }
    SUBCASE("complex literal (a+bi)") {
        const HoloExpr expected = HoloExpr::binary(Kind::add, HoloExpr::constant({1, 0}),
                                                   HoloExpr::constant({0, 2}));
        CHECK(ast_equal(parse("(1+2i)"), expected));
    }
    SUBCASE("bare i and scaled i") {
        CHECK(ast_equal(parse("i"), HoloExpr::constant({0, 1})));
        CHECK(ast_equal(parse("2*i"), HoloExpr::binary(Kind::mul, HoloExpr::constant({2, 0}),
                                                       HoloExpr::constant({0, 1}))));
    }
    SUBCASE("numbers with fraction and exponent") {
        CHECK(ast_equal(parse("1.5e-3"), HoloExpr::constant({1.5e-3, 0})));
        CHECK(ast_equal(parse("2."), HoloExpr::constant({2.0, 0})));
        CHECK(ast_equal(parse("1E2"), HoloExpr::constant({100.0, 0})));
    }
    SUBCASE("whitespace is insignificant") {
        CHECK(ast_equal(parse("  tau + 1 "), parse("tau+1")));
    }
}

TEST_CASE("parse errors carry the byte offset") {
    SUBCASE("incomplete expression") {
        try {
            parse("tau +");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset == 5);
        }
    }
    SUBCASE("unknown identifier") {
        try {
            parse("tau + x");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset == 6);
        }
    }
    SUBCASE("unknown function") {
        try {
            parse("foo(tau)");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset == 0);
        }
    }
    SUBCASE("unbalanced parenthesis") {
        CHECK_THROWS_AS(parse("(tau+1"), ParseError);
        CHECK_THROWS_AS(parse("tau)"), ParseError);
        CHECK_THROWS_AS(parse("exp(tau"), ParseError);
    }
    SUBCASE("empty input") {
        CHECK_THROWS_AS(parse(""), ParseError);
    }
    SUBCASE("juxtaposed atoms") {
        CHECK_THROWS_AS(parse("2 tau"), ParseError);
    }
}

namespace {

// Random parseable AST for the round-trip property. Constants are kept in
// literal form (nonnegative real or nonnegative pure imaginary).
HoloExpr random_tree(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 8);
    std::uniform_real_distribution<double> val(0.0, 4.0);
    switch (pick(rng)) {
        case 0: return HoloExpr::variable();
        case 1: return HoloExpr::constant({val(rng), 0.0});
        case 2: return HoloExpr::constant({0.0, val(rng)});
        case 3:
        case 4: {
            const Kind k = std::uniform_int_distribution<int>(0, 1)(rng) ? Kind::add : Kind::sub;
            return HoloExpr::binary(k, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        }
        case 5: {
            const Kind k = std::uniform_int_distribution<int>(0, 1)(rng) ? Kind::mul : Kind::div;
            return HoloExpr::binary(k, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        }
        case 6: return HoloExpr::negate(random_tree(rng, depth - 1));
        case 7:
            return HoloExpr::binary(Kind::pow, random_tree(rng, depth - 1),
                                    random_tree(rng, depth - 1));
        default: {
            const Builtin f = static_cast<Builtin>(std::uniform_int_distribution<int>(0, 8)(rng));
            return HoloExpr::call(f, random_tree(rng, depth - 1));
        }
    }
}

}  // namespace

TEST_CASE("parse . pretty . parse is AST-identical") {
    SUBCASE("hand-picked sources") {
        for (const char* src :
             {"tau^2", "log(tau)", "-tau^2", "(-tau)^2", "tau^-2", "1+2*tau-3/tau",
              "tau-(1-tau)", "tau/(2/tau)", "2^3^tau", "(1+2i)*exp(tau)", "-(tau+1)",
              "--tau", "sinh(cosh(tan(tau)))", "1.5e-3*tau+2.", "tau*(tau+1)"}) {
            const HoloExpr a = parse(src);
            CAPTURE(src);
            CAPTURE(pretty(a));
            CHECK(ast_equal(parse(pretty(a)), a));
        }
    }
    SUBCASE("random trees") {
        std::mt19937 rng(1234);
        for (int k = 0; k < 500; ++k) {
            const HoloExpr t = random_tree(rng, 5);
            const std::string printed = pretty(t);
            CAPTURE(printed);
            CHECK(ast_equal(parse(printed), t));
        }
    }
}
