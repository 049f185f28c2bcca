// The period map: from a parameter point to the four-vector of periods of
// the holomorphic two-form over the tube cycles, and on to coordinates on
// a product of half planes.
//
// Two independent pathways compute the same vector xi = (xi1..xi4):
//   * periods_chambers  - four genuinely two-dimensional iterated integrals
//     of du dy / F over the chambers R1..R4, combined as
//       xi1 = 2 R2 + 2 R4,  xi2 = 2 R2,  xi3 = 6 R1 + 2 R3,  xi4 = -2 R1;
//   * periods_fiberwise - six one-dimensional integrals over y of fiber
//     half-periods (Carlson route), assembled along the vanishing arcs:
//       xi1 = G1 + G2,  xi2 = G5 - G4,  xi4 = G6+G5-G4-G3+G2+G1,
//       xi3 = -G4 - 3 xi4,
//     where G_j is the tube period over arc L_j.
// The two assemblies integrate over different regions (xi1 fiberwise uses
// (s4, inf), the chamber route uses (s1, s5)), so their agreement is a
// nontrivial consistency check, not a reformulation.
#pragma once

#include <array>

#include "hp/efiber.hpp"
#include "hp/quad.hpp"
#include "hp/types.hpp"
#include "hp/walls.hpp"

namespace hp::periodmap {

struct PeriodVector {
    std::array<cplx, 4> xi{};
    double err_est = 0.0;
    const char* method = "";
};

PeriodVector periods_chambers(const ModuliPoint& m, const walls::WallSet& ws,
                              const quad::QuadSpec& spec = {});

PeriodVector periods_fiberwise(const ModuliPoint& m, const walls::WallSet& ws,
                               const quad::QuadSpec& spec = {});

// Tube periods over the six vanishing arcs (fiberwise route), mostly for
// tests; G[j] corresponds to arc L_{j+1}.
std::array<cplx, 6> arc_periods(const ModuliPoint& m, const walls::WallSet& ws,
                                const quad::QuadSpec& spec = {});

// |2 xi1 xi2 + 2 xi3^2 + 2 xi3 xi4 - 2 xi4^2| / (|xi1|^2 + ... + |xi4|^2):
// the relative residual of the period quadric.
double quadric_residual(const PeriodVector& pv);

// Re(xi^T A conj(xi)) with A = U + [[2,1],[1,-2]]; positive on the correct
// component of the period domain.
double positivity(const PeriodVector& pv);

struct HilbertPoint {
    cplx z1{0.0, 0.0};
    cplx z2{0.0, 0.0};
};

// z1 = -(xi3 + (1-sqrt5)/2 xi4)/xi2,  z2 = -(xi3 + (1+sqrt5)/2 xi4)/xi2.
// Throws DegeneratePeriodsError when |xi2| is negligible against |xi|.
HilbertPoint to_hilbert(const PeriodVector& pv);

// Maps a pair in the lower half planes to the upper ones by simultaneous
// conjugation; throws ComponentAmbiguousError when the two coordinates lie
// in opposite half planes.
HilbertPoint normalize_component(const HilbertPoint& z);

// |z1 z2 + xi1/xi2|: an exact identity on the quadric, useful as an
// end-to-end check of the coordinate formulas.
double product_identity_residual(const HilbertPoint& z, const PeriodVector& pv);

} // namespace hp::periodmap
