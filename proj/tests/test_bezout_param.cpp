#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bezout/antisym.hpp"
#include "support/testkit.hpp"

using bezout::AntisymMatrix;
using bezout::GaussianRational;
using bezout::MultiPoly;
using bezout::PolyTuple;

namespace {

MultiPoly zvar(std::size_t n, std::size_t j) { return MultiPoly::variable(n, j); }
MultiPoly cnst(std::size_t n, long v) { return MultiPoly::constant(n, GaussianRational(v)); }

}  // namespace

TEST_CASE("shift by a constant antisymmetric matrix on a fixed pair") {
    const MultiPoly z = zvar(1, 0);
    const PolyTuple a({z, cnst(1, 1) - z});
    const PolyTuple x({cnst(1, 1), cnst(1, 1)});
    REQUIRE(x.dot(a).is_one());

    AntisymMatrix h = AntisymMatrix::zero(2, 1);
    h.set_upper(0, 1, cnst(1, 1));
    const PolyTuple y = bezout::apply_shift(a, x, h);
    CHECK(y[0] == z);
    CHECK(y[1] == cnst(1, 1) + z);
    CHECK(y.dot(a).is_one());
}

TEST_CASE("difference matrix of two explicit one parameter solutions") {
    const MultiPoly z = zvar(1, 0);
    const MultiPoly h = z * z;
    const MultiPoly one = cnst(1, 1);
    const PolyTuple a({z, one - z});
    const PolyTuple x({one, one});
    const PolyTuple y({one - h * (one - z), one + h * z});
    REQUIRE(x.dot(a).is_one());
    REQUIRE(y.dot(a).is_one());

    const AntisymMatrix d = bezout::difference_matrix(x, y);
    CHECK(d.at(0, 1) == h);
    CHECK(d.at(1, 0) == MultiPoly(1) - h);
    CHECK(bezout::apply_shift(a, x, d) == y);
}

TEST_CASE("aH annihilates a for every antisymmetric H") {
    testkit::Rng rng(2026);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 3));
        const std::size_t count = static_cast<std::size_t>(rng.range(2, 4));
        const PolyTuple a = rng.tuple(count, n, 3);
        const AntisymMatrix h = rng.antisym(count, n, 2);
        CHECK(bezout::annihilation_residual(a, h).is_zero());
    }
}

TEST_CASE("shifting a solution gives a solution, for arbitrary H") {
    testkit::Rng rng(404);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 3));
        const std::size_t count = static_cast<std::size_t>(rng.range(2, 4));
        const auto [x, a] = rng.solution_pair(count, n);
        REQUIRE(x.dot(a).is_one());
        const AntisymMatrix h = rng.antisym(count, n, 2);
        const PolyTuple y = bezout::apply_shift(a, x, h);
        CHECK(y.dot(a).is_one());
    }
}

TEST_CASE("the difference matrix recovers any second solution") {
    testkit::Rng rng(777);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 2));
        const std::size_t count = static_cast<std::size_t>(rng.range(2, 3));
        const auto [x, a] = rng.solution_pair(count, n);
        const PolyTuple y = bezout::apply_shift(a, x, rng.antisym(count, n, 2));
        REQUIRE(x.dot(a).is_one());
        REQUIRE(y.dot(a).is_one());

        const AntisymMatrix d = bezout::difference_matrix(x, y);
        CHECK(bezout::apply_shift(a, x, d) == y);
        for (std::size_t j = 0; j < count; ++j)
            for (std::size_t k = 0; k < count; ++k)
                CHECK(d.at(j, k) == MultiPoly(n) - d.at(k, j));
    }
}

TEST_CASE("matrix construction validates shape and antisymmetry") {
    const MultiPoly z = zvar(1, 0);
    const MultiPoly zero(1);

    CHECK_NOTHROW(AntisymMatrix::from_entries({{zero, z}, {zero - z, zero}}));
    // Diagonal must vanish.
    CHECK_THROWS_AS(AntisymMatrix::from_entries({{z, zero}, {zero, zero}}),
                    bezout::not_antisymmetric);
    // Lower triangle must be the negated mirror.
    CHECK_THROWS_AS(AntisymMatrix::from_entries({{zero, z}, {z, zero}}),
                    bezout::not_antisymmetric);
    // Ragged grids are rejected.
    CHECK_THROWS_AS(AntisymMatrix::from_entries({{zero, z}}), bezout::dimension_mismatch);
    // Mixed variable counts are rejected.
    CHECK_THROWS_AS(AntisymMatrix::from_entries({{zero, zvar(2, 0)}, {zero - z, zero}}),
                    bezout::dimension_mismatch);

    AntisymMatrix h = AntisymMatrix::zero(3, 1);
    CHECK(h.is_zero());
    CHECK(h.max_entry_degree() == -1);
    CHECK_THROWS_AS(h.set_upper(1, 1, z), bezout::index_out_of_range);
    CHECK_THROWS_AS(h.set_upper(2, 1, z), bezout::index_out_of_range);
    CHECK_THROWS_AS(h.set_upper(0, 3, z), bezout::index_out_of_range);
    CHECK_THROWS_AS(h.set_upper(0, 1, zvar(2, 0)), bezout::dimension_mismatch);

    h.set_upper(0, 2, z * z);
    CHECK(h.at(2, 0) == zero - z * z);
    CHECK(h.max_entry_degree() == 2);
    CHECK_FALSE(h.is_zero());
}

TEST_CASE("matrix sums subtract back out") {
    testkit::Rng rng(8);
    for (int t = 0; t < 50; ++t) {
        const AntisymMatrix a = rng.antisym(3, 2, 2);
        const AntisymMatrix b = rng.antisym(3, 2, 2);
        CHECK((a + b) - b == a);
        CHECK(a - a == AntisymMatrix::zero(3, 2));
    }
}

TEST_CASE("vector by matrix multiplication validates dimensions") {
    const MultiPoly z = zvar(1, 0);
    const PolyTuple v({z, z});
    const AntisymMatrix h = AntisymMatrix::zero(3, 1);
    CHECK_THROWS_AS(bezout::row_times_matrix(v, h), bezout::dimension_mismatch);
    CHECK_THROWS_AS(bezout::apply_shift(v, PolyTuple({z, z, z}), AntisymMatrix::zero(2, 1)),
                    bezout::dimension_mismatch);
    CHECK_THROWS_AS(bezout::difference_matrix(v, PolyTuple({z, z, z})),
                    bezout::dimension_mismatch);
}
