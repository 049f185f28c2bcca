// Invariant polynomials on the parameter plane.
#pragma once

#include "hp/types.hpp"

namespace hp::invariants {

// The degree-five wall-collision polynomial
//   K(X, Y) = -1728 X^5 + 64 (5 X^2 - Y)^2 + 720 X^3 Y - 80 X Y^2 + Y^3;
// it vanishes exactly where two walls collide at a positive y.
double klein(double X, double Y);

// Sum of the absolute values of the five monomial groups above, as a scale
// for relative smallness tests.
double klein_scale(double X, double Y);

// Y * K(X, Y): vanishes on the full locus where the wall configuration
// degenerates (two walls meet, or one wall reaches y = 0).
double branch_divisor_value(double X, double Y);
double branch_divisor_scale(double X, double Y);

// The symmetric modular relation cutting out the locus of split abelian
// surfaces, as (4 * lhs-product - rhs-square); zero on the locus.  Restricted
// to l3 = 0 it factors as -(l1 l2 (1 - l2))^2, which the tests pin down.
double humbert_residual(double l1, double l2, double l3);

// Normalized parameter point (B/A^3, C/A^5); throws CuspPointError when
// |A|^3 is negligible against |B|, |C| scales.
ModuliPoint xy_from_weighted(double A, double B, double C);

} // namespace hp::invariants
