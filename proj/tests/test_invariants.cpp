#include "doctest.h"

#include <cmath>

#include "hp/invariants.hpp"
#include "hp/types.hpp"

using namespace hp;

TEST_SUITE("invariants") {

TEST_CASE("wall-collision polynomial at rational points") {
    // hand-evaluated: all dyadic, so the doubles are exact
    CHECK(invariants::klein(1.0, 0.0) == -128.0);
    CHECK(invariants::klein(0.5, 0.5) == 17.125);
    CHECK(invariants::branch_divisor_value(0.5, 0.5) == 8.5625);
    CHECK(invariants::branch_divisor_value(0.5, 0.0) == 0.0);
    CHECK(invariants::klein_scale(0.5, 0.5) > 0.0);
    CHECK(invariants::branch_divisor_scale(0.5, 0.5) > 0.0);
}

TEST_CASE("split-surface relation value") {
    CHECK(invariants::humbert_residual(0.3, 0.7, 0.2) ==
          doctest::Approx(16597.0 / 781250.0).epsilon(1e-14));
}

TEST_CASE("split-surface relation factors on the l3 = 0 slice") {
    for (double l1 : {-1.5, -0.4, 0.3, 0.8, 2.0}) {
        for (double l2 : {-1.2, -0.5, 0.4, 0.9, 1.7}) {
            CAPTURE(l1);
            CAPTURE(l2);
            const double expect =
                -(l1 * l1) * (l2 * l2) * (1.0 - l2) * (1.0 - l2);
            const double got = invariants::humbert_residual(l1, l2, 0.0);
            CHECK(got == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("normalized point from weighted parameters") {
    const ModuliPoint m = invariants::xy_from_weighted(2.0, 3.0, 5.0);
    CHECK(m.x == 3.0 / 8.0);
    CHECK(m.y == 5.0 / 32.0);
    // scaling (A, B, C) by lambda^(1,3,5) leaves the point fixed
    const double l = 1.7;
    const ModuliPoint ml = invariants::xy_from_weighted(
        2.0 * l, 3.0 * l * l * l, 5.0 * std::pow(l, 5));
    CHECK(ml.x == doctest::Approx(m.x).epsilon(1e-14));
    CHECK(ml.y == doctest::Approx(m.y).epsilon(1e-14));
    CHECK_THROWS_AS((void)invariants::xy_from_weighted(0.0, 1.0, 1.0),
                    CuspPointError);
    CHECK_THROWS_AS((void)invariants::xy_from_weighted(1e-9, 1.0, 1.0),
                    CuspPointError);
}

} // TEST_SUITE
