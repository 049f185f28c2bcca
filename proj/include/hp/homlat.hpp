// The integer homology layer: fiber monodromy matrices, transport of cycle
// coefficients across branch cuts, intersection tables for the tube cycles,
// and the embedded arc fixture that realizes two of the tubes geometrically.
//
// Conventions (fixed once, used everywhere):
//  * Cycle coefficients are integer row vectors n = (n1, n2) meaning
//    n1 gamma1 + n2 gamma2; crossing the cut of wall j in the positive
//    direction maps n -> n * M_j (row-vector times matrix).
//  * Cuts hang downward (Im y < 0) from walls 0, 1, 2 and upward from
//    walls 3, 4, 5 (wall 0 sits at y = 0).  The positive crossing direction
//    is left-to-right through a downward cut and right-to-left through an
//    upward cut; with counterclockwise loops and the base point between
//    walls 2 and 3 this makes a small loop around wall j pick up exactly
//    M_j.  The cut complement is simply connected, so transport along any
//    arc depends only on its endpoints and winding.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "hp/types.hpp"

namespace hp::homlat {

// Exact 2x2 integer matrices.
struct IMat2 {
    std::array<std::array<long, 2>, 2> a{};

    static IMat2 identity();
    long det() const;
    IMat2 operator*(const IMat2& o) const;
    bool operator==(const IMat2& o) const = default;
    IMat2 inverse() const; // requires det = +-1, else NotIntegralError
    IMat2 pow(int k) const; // k may be negative
};

using Coeff = std::array<long, 2>; // row vector (n1, n2)

Coeff apply(const Coeff& n, const IMat2& M); // n * M

// The monodromy matrix of the singular fiber over wall j = 0..5, plus the
// matrix over infinity (index 6).
IMat2 monodromy(int j);

// Local normal forms: a fiber of Kodaira type I_b has monodromy conjugate
// to [[1,0],[b,1]]; the fiber over infinity has a matrix of order four.
IMat2 kodaira_Ib(int b);

// Exact identities tying the seven matrices together; throws
// RelationFailedError with a description if any fails.  Checked:
//   M1 M2 M4 M3 = M1 M2 M5 M3 = [[1,4],[0,1]],  M2 = M3,
//   M0 M1 M2 M0^-1 M3^-1 = M1,
//   (Mj - I)^2 = 0 for j = 1..5,  Minf^2 = -I,  det = 1 for all,
//   B^-1 [[1,0],[2,1]] B = [[3,-2],[2,-1]] with B = [[1,-1],[0,1]].
void verify_monodromy_relations();

// Intersection tables for the two bases of the transcendental-complement
// lattice: the four tube cycles C1..C4 and the rebased D1..D4 with
//   D1 = C1, D2 = C2, D3 = C4 - C3, D4 = C4.
// Also the pairings of the six vanishing-arc tubes L1..L6 against both.
struct IntersectionTables {
    std::array<std::array<long, 4>, 4> CC{};
    std::array<std::array<long, 4>, 4> DD{};
    std::array<std::array<long, 4>, 6> LC{};
    std::array<std::array<long, 4>, 6> LD{};
};
const IntersectionTables& intersection_tables();

// Recomputes DD from CC and LD from LC via the basis change above and
// compares with the stored tables; verifies DD = 2 A where A is the fixed
// quadratic form diag-block U + [[2,1],[1,-2]]; verifies the dual-basis
// expansion of the L rows.  Throws RelationFailedError on any mismatch.
void verify_intersection_tables();

// The quadratic form A as a 4x4 integer matrix: U + [[2,1],[1,-2]].
std::array<std::array<long, 4>, 4> quad_form_A();

// Transport of a coefficient row along a sequence of signed cut crossings.
struct CutCrossing {
    int wall = 0;  // 0..5
    int sign = +1; // +1 positive direction, -1 negative
};
Coeff transport(const Coeff& n, const std::vector<CutCrossing>& word);

// ---------------------------------------------------------------------------
// Arc fixture: concrete polylines in the (Re y, Im y) plane realizing the
// tubes C1, C2 (closed loops) and L1..L6 (arcs between walls), over a
// normalized wall configuration s_j = j.  Loaded from embedded JSON.

struct BaseArc {
    std::string name;
    bool closed = false;
    Coeff cycle{};                          // generator coefficients at start
    std::vector<std::array<double, 2>> pts; // polyline vertices
    std::vector<CutCrossing> cut_crossings; // annotation, validated on load
};

struct ArcFixture {
    std::array<double, 5> walls{};
    std::vector<BaseArc> arcs;
    const BaseArc& arc(const std::string& name) const; // FixtureError if absent
};

// Parses and validates the embedded fixture: cut crossings recomputed from
// the geometry must match the annotations, closed arcs must transport their
// cycle back to itself, and open arcs must start and end in (+-) the cycle
// dying at their endpoint wall.
const ArcFixture& fixture_arcs();

// Intersection number of the tubes over two arcs:
//   (T_a . T_b) = sum over transversal crossings p of
//                 -sign(det[dir_a, dir_b]) * (m1 n2 - m2 n1),
// where (m1, m2), (n1, n2) are the transported coefficient rows of the two
// carried cycles at p (the generators pair to (gamma1 . gamma2) = 1 in the
// fiber).  Throws NonTransverseError for degenerate crossings.
long tube_intersection(const BaseArc& a, const BaseArc& b,
                       const ArcFixture& fx);

} // namespace hp::homlat
