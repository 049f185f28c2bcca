// The wall structure of the parameter plane and the real fiber geometry.
//
// For a parameter point (X, Y) the fiber over y carries the square root
//
//     F(u) = sqrt(u^2 - 2 y^5) * sqrt(u - p(y)),   p(y) = 5 y^2 - 10 X y + Y,
//
// whose finite branch points in u are
//
//     alpha(y) =  y^2 sqrt(2 y),   beta(y) = -alpha(y),   p(y).
//
// The y-values where two of {alpha, beta, p} collide are the positive roots
// of the wall quintic  D(y) = 2 y^5 - p(y)^2.  On the open set U0 all five
// roots s1 < ... < s5 are simple and positive; they cut (0, inf) into six
// gaps, on each of which the branch points keep a fixed order w1 < w2 < w3.
#pragma once

#include <array>
#include <string>

#include "hp/poly.hpp"
#include "hp/types.hpp"

namespace hp::walls {

// Ascending coefficients of D(y) = 2 y^5 - p(y)^2:
//   [-Y^2, 20XY, -(100X^2 + 10Y), 100X, -25, 2].
poly::RealPoly wall_quintic(const ModuliPoint& m);

struct WallSet {
    std::array<double, 5> s{};  // ascending wall positions s1..s5
    double min_gap = 0.0;       // min over {s1, s2-s1, ..., s5-s4}
    double root_residual = 0.0; // max |D(s_j)| over the five roots
};

// Isolates the five walls; throws NotInU0Error when the quintic does not
// have five simple positive real roots.
WallSet walls(const ModuliPoint& m);

bool in_U0(const ModuliPoint& m);

// Branch values over a real fiber coordinate y > 0.
struct BranchValues {
    double alpha; // y^2 sqrt(2y) > 0
    double beta;  // -alpha
    double p;     // 5y^2 - 10Xy + Y
};
BranchValues branch_values(double y, const ModuliPoint& m);

// Which of the six gaps a fiber coordinate lies in: 0 for (0, s1), ...,
// 5 for (s5, inf).  Throws OnWallError within `wall_tol * s5` of any wall
// (or at y <= 0).  The default keeps the dead zone at a few ulps so that
// quadrature nodes piled double-exponentially close to a wall still
// resolve; pass a larger tolerance for user-facing classification.
int gap_index(double y, const WallSet& ws, double wall_tol = 1e-15);

enum class Branch { Beta, Alpha, P };

// The ascending branch ordering over y, together with the labels saying
// which branch sits at which slot.  The labels follow a fixed per-gap
// pattern; ordering_at checks the numerically sorted values against that
// pattern and throws TableMismatchError on disagreement.
struct Ordering {
    int gap = -1;
    std::array<double, 3> w{};      // w1 < w2 < w3
    std::array<Branch, 3> which{};  // branch occupying each slot
};
Ordering ordering_at(double y, const WallSet& ws, const ModuliPoint& m);

// The expected slot pattern for each gap, lowest first.
std::array<Branch, 3> gap_pattern(int gap);

// The four rectangle-like integration chambers.  Each chamber is a y-range
// together with the pair of consecutive branch slots bounding u, plus the
// list of interior walls where the third branch point meets an endpoint of
// the u-interval (the inner integral develops a logarithmic singularity in
// y there, so outer integration must split).
struct Chamber {
    double y_lo = 0.0, y_hi = 0.0;
    int slot_lo = 0;  // u runs from w[slot_lo] to w[slot_lo + 1]
    std::array<double, 2> interior_walls{}; // ascending; NaN-padded
    int n_interior = 0;
    cplx phase{1.0, 0.0}; // value of 1/F on the u-interval divided by 1/|F|
};
std::array<Chamber, 4> chambers(const WallSet& ws);

// F evaluated just above the real u-axis.  Each factor contributes
// sqrt(u - w) for u > w and i sqrt(w - u) for u < w, so 1/F cycles through
// the phases  +i, -1, -i, +1  on the four u-intervals separated by the
// branch points.  Throws BranchPointError within `bp_tol` of a branch point.
cplx F_real(double u, double y, const ModuliPoint& m, double bp_tol = 0.0);

// Offset-aware magnitude of F on the gap (w[slot], w[slot+1]): the caller
// provides the exact distances of u to both interval endpoints so the two
// singular square-root factors lose no precision.  Returns |F|.
double F_gap_abs(const Ordering& ord, int slot, double u, double du_lo, double du_hi);

// Phase of 1/F on the region with `below` branch points to the left of u:
// +i, -1, -i, +1 for below = 0, 1, 2, 3.
cplx inv_phase(int below);

} // namespace hp::walls
