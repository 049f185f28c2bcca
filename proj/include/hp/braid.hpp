// Numerical recovery of the fiber monodromy by analytic continuation.
//
// The fiber periods are continued along a closed loop in the (complex)
// fiber-coordinate plane.  At every step the two branch points alpha(y),
// -alpha(y) are tracked with a continuous argument of y (so circling y = 0
// exchanges them coherently), and the period lattice at the current fiber
// is spanned by two straight-segment integrals between branch points.  The
// tracked period values are snapped to the nearest lattice element after
// each step; a snap that is ambiguous (rounding distance too large) aborts
// with StepTooCoarseError, and the driver retries with more steps.
#pragma once

#include <vector>

#include "hp/efiber.hpp"
#include "hp/homlat.hpp"
#include "hp/quad.hpp"
#include "hp/types.hpp"
#include "hp/walls.hpp"

namespace hp::braid {

struct Loop {
    int wall = 0;              // the wall this loop encircles (0..5)
    std::vector<cplx> pts;     // closed polyline, pts.front() == pts.back()
    double radius = 0.0;
};

// The canonical counterclockwise loop around wall j based at the midpoint
// of (s2, s3): walls with downward cuts (j <= 2) are approached through the
// upper half plane, walls with upward cuts (j >= 3) through the lower half
// plane, so the loop crosses only the cut of wall j, once, in the positive
// direction.
Loop loop_for(int j, const walls::WallSet& ws);

struct Continuation {
    efiber::FiberPeriods start;
    cplx pi1_end{0.0, 0.0};
    cplx pi2_end{0.0, 0.0};
    int steps_used = 0;
    double max_snap_residual = 0.0; // worst |value - lattice element| seen
};

// Continues (pi1, pi2) once around the loop.  n_steps is the initial
// subdivision; on StepTooCoarseError the caller may retry with more steps
// (continue_periods_adaptive does so automatically, doubling up to a cap).
// Steps are spread uniformly along the polyline, so a loop that squeezes
// past intermediate walls needs a budget of roughly its total length over a
// third of the tightest clearance; the outermost wall of a five-wall set
// routinely lands in the ten-thousands.
Continuation continue_periods(const ModuliPoint& m, const walls::WallSet& ws,
                              const Loop& loop, int n_steps = 256,
                              const quad::QuadSpec& spec = {});

Continuation continue_periods_adaptive(const ModuliPoint& m,
                                       const walls::WallSet& ws,
                                       const Loop& loop,
                                       int n_steps = 256,
                                       int max_steps = 32768,
                                       const quad::QuadSpec& spec = {});

struct RecoveredMatrix {
    homlat::IMat2 M;
    double residual = 0.0; // max distance of the solved entries to integers
};

// Expresses the continued periods over the starting ones:
//   pi_i(end) = M[i][0] pi1(start) + M[i][1] pi2(start),
// solving two real 2x2 systems and rounding.  Throws NotIntegralError when
// an entry is farther than 0.25 from an integer or |det M| != 1.
RecoveredMatrix recover_matrix(const Continuation& c);

} // namespace hp::braid
