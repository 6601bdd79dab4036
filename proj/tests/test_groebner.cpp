#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bezout/groebner.hpp"
#include "support/euclid.hpp"
#include "support/testkit.hpp"

using bezout::GaussianRational;
using bezout::MultiPoly;
using bezout::PolyTuple;
using bezout::TermOrder;

namespace {

MultiPoly zvar(std::size_t n, std::size_t j) { return MultiPoly::variable(n, j); }
MultiPoly cnst(std::size_t n, long v) { return MultiPoly::constant(n, GaussianRational(v)); }

}  // namespace

TEST_CASE("the hyperbola pair yields the classic cofactors") {
    const MultiPoly z1 = zvar(2, 0), z2 = zvar(2, 1);
    const PolyTuple f({z1 * z2 - cnst(2, 1), z1});

    const auto cert = bezout::solve_bezout(f);
    REQUIRE(cert.has_value());
    CHECK(cert->verified);
    CHECK(cert->g[0] == cnst(2, -1));
    CHECK(cert->g[1] == z2);
    CHECK(cert->g.dot(f).is_one());
}

TEST_CASE("a variable and its complement to one") {
    const MultiPoly z = zvar(1, 0);
    const PolyTuple f({z, cnst(1, 1) - z});
    const auto cert = bezout::solve_bezout(f);
    REQUIRE(cert.has_value());
    CHECK(cert->g[0] == cnst(1, 1));
    CHECK(cert->g[1] == cnst(1, 1));
}

TEST_CASE("coprime leading monomials leave the basis alone") {
    const MultiPoly z1 = zvar(2, 0), z2 = zvar(2, 1);
    const PolyTuple f({z1 - cnst(2, 1), z2 - cnst(2, 1)});
    const bezout::TrackedBasis basis = bezout::buchberger(f);
    REQUIRE(basis.size() == 2);
    CHECK(basis.elements()[0] == z1 - cnst(2, 1));
    CHECK(basis.elements()[1] == z2 - cnst(2, 1));
    CHECK_FALSE(bezout::solve_bezout(f).has_value());
}

TEST_CASE("systems with a common zero are refused") {
    const MultiPoly z1 = zvar(2, 0), z2 = zvar(2, 1);
    // Both vanish at (1, 1).
    CHECK_FALSE(bezout::solve_bezout(PolyTuple({z1 - cnst(2, 1), z1 * z2 - cnst(2, 1)})));
    // Both vanish at the origin.
    CHECK_FALSE(bezout::solve_bezout(PolyTuple({z1, z2})));
    CHECK_FALSE(bezout::solve_bezout(PolyTuple({z1 * z1})));
}

TEST_CASE("reduction returns quotients that expand back") {
    const MultiPoly z1 = zvar(2, 0), z2 = zvar(2, 1);
    const PolyTuple f({z1 - cnst(2, 1)});
    const bezout::TrackedBasis basis = bezout::buchberger(f, TermOrder::Lex);

    const MultiPoly p = z1 * z1 + z2;
    const bezout::Reduction red = bezout::reduce(p, basis);
    CHECK(red.remainder == cnst(2, 1) + z2);
    CHECK(red.quotients[0] == z1 + cnst(2, 1));

    MultiPoly expanded = red.remainder;
    for (std::size_t i = 0; i < basis.size(); ++i)
        expanded = expanded + red.quotients[i] * basis.elements()[i];
    CHECK(expanded == p);
}

TEST_CASE("random reductions expand back and leave irreducible remainders") {
    testkit::Rng rng(606);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 2));
        PolyTuple f = rng.tuple(2, n, 2, 3);
        bool all_zero = true;
        for (const MultiPoly& e : f)
            if (!e.is_zero()) all_zero = false;
        if (all_zero) continue;

        const bezout::TrackedBasis basis = bezout::buchberger(f);
        const MultiPoly p = rng.poly(n, 4, 5);
        const bezout::Reduction red = bezout::reduce(p, basis);

        MultiPoly expanded = red.remainder;
        for (std::size_t i = 0; i < basis.size(); ++i)
            expanded = expanded + red.quotients[i] * basis.elements()[i];
        CHECK(expanded == p);

        for (const auto& [mono, coeff] : red.remainder.terms()) {
            (void)coeff;
            for (std::size_t i = 0; i < basis.size(); ++i)
                CHECK_FALSE(basis.elements()[i].leading_term(basis.order()).first.divides(mono));
        }
    }
}

TEST_CASE("every tracked element is the stated combination of the inputs") {
    testkit::Rng rng(909);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 2));
        const std::size_t count = static_cast<std::size_t>(rng.range(2, 3));
        PolyTuple f = rng.tuple(count, n, 2, 3);
        bool all_zero = true;
        for (const MultiPoly& e : f)
            if (!e.is_zero()) all_zero = false;
        if (all_zero) continue;

        for (TermOrder order : {TermOrder::Grevlex, TermOrder::Grlex, TermOrder::Lex}) {
            const bezout::TrackedBasis basis = bezout::buchberger(f, order);
            for (std::size_t i = 0; i < basis.size(); ++i)
                CHECK(basis.cofactor(i).dot(f) == basis.elements()[i]);
        }
    }
}

TEST_CASE("all three term orders certify the same fixtures") {
    const MultiPoly z1 = zvar(2, 0), z2 = zvar(2, 1);
    // z1^2 z2 - 1 and z1 share no zero: the first is -1 wherever z1 vanishes.
    const PolyTuple f({z1 * z1 * z2 - cnst(2, 1), z1});
    for (TermOrder order : {TermOrder::Grevlex, TermOrder::Grlex, TermOrder::Lex}) {
        const auto cert = bezout::solve_bezout(f, order);
        REQUIRE(cert.has_value());
        CHECK(cert->g.dot(f).is_one());
    }
}

TEST_CASE("zero entries in the input are tolerated, an all zero input is not") {
    const MultiPoly z = zvar(1, 0);
    const PolyTuple f({MultiPoly(1), z, cnst(1, 1) - z});
    const auto cert = bezout::solve_bezout(f);
    REQUIRE(cert.has_value());
    CHECK(cert->g.dot(f).is_one());
    CHECK(cert->g.size() == 3);

    CHECK_THROWS_AS(bezout::buchberger(PolyTuple({MultiPoly(1), MultiPoly(1)})),
                    bezout::all_zero_input);
}

TEST_CASE("imaginary coefficients certify too") {
    const MultiPoly z = zvar(1, 0);
    const MultiPoly i = MultiPoly::constant(1, GaussianRational::i());
    const PolyTuple f({i * z - cnst(1, 1), z});
    const auto cert = bezout::solve_bezout(f);
    REQUIRE(cert.has_value());
    CHECK(cert->g.dot(f).is_one());
}

TEST_CASE("univariate verdicts match the extended euclid oracle") {
    testkit::Rng rng(121212);
    int units = 0;
    for (int t = 0; t < 120; ++t) {
        MultiPoly a = rng.nonzero_poly(1, 3, 3);
        MultiPoly b = rng.nonzero_poly(1, 3, 3);
        if (t % 2 == 1) {
            // Plant a common root so roughly half the instances are refused.
            const MultiPoly factor = zvar(1, 0) - MultiPoly::constant(1, rng.gaussian());
            a = a * factor;
            b = b * factor;
        }
        const PolyTuple f({a, b});
        const auto cert = bezout::solve_bezout(f);
        const bool oracle = euclid::coprime(a, b);
        CHECK(cert.has_value() == oracle);
        if (cert) {
            ++units;
            CHECK(cert->g.dot(f).is_one());
            const auto [s, tt] = euclid::euclid_bezout(a, b);
            CHECK((s * a + tt * b).is_one());
        }
    }
    CHECK(units >= 20);
}

TEST_CASE("tracked basis construction rejects mismatched arrays") {
    const MultiPoly z = zvar(1, 0);
    const PolyTuple f({z});
    CHECK_THROWS_AS(bezout::TrackedBasis(f, TermOrder::Grevlex, {z, z}, {PolyTuple({z})}),
                    bezout::dimension_mismatch);
    const bezout::TrackedBasis basis = bezout::buchberger(f);
    CHECK_THROWS_AS(basis.cofactor(99), bezout::index_out_of_range);
}

TEST_CASE("solves_unit_equation is exactly the identity test") {
    const MultiPoly z = zvar(1, 0);
    const PolyTuple f({z, cnst(1, 1) - z});
    CHECK(bezout::solves_unit_equation(PolyTuple({cnst(1, 1), cnst(1, 1)}), f));
    CHECK_FALSE(bezout::solves_unit_equation(PolyTuple({cnst(1, 1), cnst(1, 2)}), f));
    CHECK_FALSE(bezout::solves_unit_equation(PolyTuple({z, z}), f));
}
