// Elliptic integrals over a single fiber.
//
// Over a fiber coordinate y in gap g the three branch points w1 < w2 < w3
// split the real u-line into four intervals, and the integral of du/F over
// each interval is a pure phase times one of two magnitudes:
//
//     J12 = int_{w1}^{w2} du/|F| = 2 R_F(0, w3-w2, w3-w1),
//     J23 = int_{w2}^{w3} du/|F| = 2 R_F(0, w2-w1, w3-w1),
//
// and the two unbounded intervals repeat them:  int_{-inf}^{w1} = J23,
// int_{w3}^{inf} = J12.  The lattice generators over each gap are fixed
// integer/phase combinations of J12 and J23 (see half_period).
//
// Two independent evaluation routes are provided: Carlson's R_F (duplication
// theorem) and direct double-exponential quadrature of 1/|F|.  They are
// cross-checked in the tests; higher-level code uses whichever is stated in
// its contract.
#pragma once

#include "hp/quad.hpp"
#include "hp/types.hpp"
#include "hp/walls.hpp"

namespace hp::efiber {

// Carlson symmetric integral R_F(x, y, z) for nonnegative arguments, at
// most one of them zero.  Converges to ~1e-15 relative via duplication.
double carlson_rf(double x, double y, double z);

struct GapMagnitudes {
    double j12 = 0.0; // int over (w1, w2) of du/|F|
    double j23 = 0.0; // int over (w2, w3)
};

// Carlson route.
GapMagnitudes gap_magnitudes_rf(const walls::Ordering& ord);

// Quadrature route (offset-aware tanh-sinh on each interval).
GapMagnitudes gap_magnitudes_de(const walls::Ordering& ord,
                                const quad::QuadSpec& spec = {});

// The four directed integrals of du/F over the intervals
// (-inf,w1), (w1,w2), (w2,w3), (w3,inf), evaluated by quadrature with the
// phases of F just above the real axis:  {+i J23', -J12', -i J23'', +J12''}.
// Their sum is the integral of du/F over the whole real line, which vanishes
// because F ~ u^{3/2} at infinity and F has no other real-line crossings;
// this is a sensitive end-to-end check of phases and magnitudes.
std::array<cplx, 4> fiber_contour_gaps(double y, const walls::WallSet& ws,
                                       const ModuliPoint& m,
                                       const quad::QuadSpec& spec = {});

enum class Cycle { One, Two }; // the two lattice generators gamma1, gamma2

// Half of the period of du/F along the given generator over the fiber at y.
// Per gap, in terms of the magnitudes above:
//   gap 0: gamma1 = -i J23 + J12h,  gamma2 = J12      (J12h = int_{w3}^{inf})
//   gap 1: gamma1 = J12,            gamma2 = J12 + i J23
//   gap 2: gamma1 = J12,            gamma2 = i J23
//   gap 3: gamma1 = J12,            gamma2 = J12 + i J23
//   gap 4: gamma1 = -i J23 + J12h,  gamma2 = J12h
//   gap 5: gamma1 = J12,            gamma2 = J12 + i J23
// (J12h equals J12 exactly, by the R_F formulas above.)
cplx half_period(double y, Cycle c, const walls::WallSet& ws,
                 const ModuliPoint& m, const quad::QuadSpec& spec = {});

// Same, Carlson route.
cplx half_period_rf(double y, Cycle c, const walls::WallSet& ws,
                    const ModuliPoint& m);

struct FiberPeriods {
    double base = 0.0; // fiber coordinate used (midpoint of (s2, s3))
    cplx pi1{0.0, 0.0}; // full period of gamma1: positive real there
    cplx pi2{0.0, 0.0}; // full period of gamma2: positive imaginary there
};

// Full periods (twice the half periods) at the canonical base fiber.
FiberPeriods periods_at_base(const ModuliPoint& m, const walls::WallSet& ws,
                             const quad::QuadSpec& spec = {});

// As y approaches wall s_j the period of the cycle that dies there tends to
// pi / sqrt(|w_far - w_col|), where w_col is the common value of the two
// colliding branch points and w_far the remaining one (for j = 0, i.e.
// y -> 0+, the limit is pi / sqrt(Y)).  Returns that limit value.
double vanishing_period_limit(int j, const walls::WallSet& ws,
                              const ModuliPoint& m);

// The generator coefficients (n1, n2) of the cycle dying at wall j
// (j = 0 means y -> 0): n1 gamma1 + n2 gamma2.
std::array<long, 2> vanishing_cycle(int j);

} // namespace hp::efiber
