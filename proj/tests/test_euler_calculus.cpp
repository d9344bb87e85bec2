#include <doctest.h>

#include <limits>
#include <random>

#include "orbchar/euler_calculus.hpp"
#include "support/oracles.hpp"

using namespace orbchar;

TEST_CASE("chi of the basic cell models") {
    CHECK(euler_char(point_cells()) == 1);
    CHECK(euler_char(interval_cells()) == 1);
    CHECK(euler_char(circle_cells()) == 0);
    // The calculus is not homotopy invariant: an open interval is a single
    // open 1-cell and counts -1, even though it contracts to a point.
    CHECK(euler_char(open_cell(1)) == -1);
    for (int d = 0; d <= 6; ++d) CHECK(euler_char(open_cell(d)) == (d % 2 == 0 ? 1 : -1));
}

TEST_CASE("chi matches an independent re-summation on random spaces") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 500; ++t) {
        const DefinableSpace s = testing::random_space(rng);
        CHECK(euler_char(s) == testing::naive_chi(s));
    }
}

TEST_CASE("chi is additive over disjoint unions and multiplicative over products") {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 500; ++t) {
        const DefinableSpace a = testing::random_space(rng);
        const DefinableSpace b = testing::random_space(rng);
        CHECK(euler_char(disjoint_union(a, b)) == euler_char(a) + euler_char(b));
        CHECK(euler_char(product(a, b)) == euler_char(a) * euler_char(b));
    }
}

TEST_CASE("disjoint union namespaces the labels") {
    DefinableSpace a{{{"x", point_cells()}}};
    DefinableSpace b{{{"x", circle_cells()}}};
    const DefinableSpace u = disjoint_union(a, b);
    REQUIRE(u.strata.size() == 2);
    CHECK(u.strata[0].label == "L:x");
    CHECK(u.strata[1].label == "R:x");
    CHECK_NOTHROW(validate_space(u));
}

TEST_CASE("cell products convolve dimensions") {
    // (2 x 0-cells + 1 x 1-cell) x (1 x 1-cell) = 2 x 1-cells + 1 x 2-cell
    const CellVector p = cell_product(interval_cells(), open_cell(1));
    CHECK(p.at(1) == 2);
    CHECK(p.at(2) == 1);
    CHECK(p.size() == 2);

    const DefinableSpace torus = product(DefinableSpace{{{"c", circle_cells()}}},
                                         DefinableSpace{{{"c", circle_cells()}}});
    CHECK(euler_char(torus) == 0);
    CHECK(torus.strata[0].label == "(c)x(c)");
}

TEST_CASE("integration against chi is exact") {
    DefinableSpace s{{{"A", point_cells()}, {"B", open_cell(1)}}};
    ConstructibleFunction<std::int64_t> f{{{"A", 2}, {"B", 3}}};
    CHECK(integrate(f, s) == 2 * 1 + 3 * (-1));

    ConstructibleFunction<std::int64_t> missing{{{"A", 2}}};
    CHECK_THROWS_AS(integrate(missing, s), MalformedFunctionError);
}

TEST_CASE("validation rejects malformed spaces") {
    DefinableSpace dup{{{"A", point_cells()}, {"A", point_cells()}}};
    CHECK_THROWS_AS(validate_space(dup), InvalidSpaceError);

    DefinableSpace neg_dim{{{"A", CellVector{{-1, 1}}}}};
    CHECK_THROWS_AS(validate_space(neg_dim), InvalidSpaceError);

    DefinableSpace neg_count{{{"A", CellVector{{0, -2}}}}};
    CHECK_THROWS_AS(validate_space(neg_count), InvalidSpaceError);
}

TEST_CASE("chi arithmetic is overflow-checked") {
    CellVector huge{{0, std::numeric_limits<std::int64_t>::max()}, {2, 1}};
    CHECK_THROWS_AS(euler_char(huge), OverflowError);
}
