// Shared value types and the error taxonomy used across the library.
//
// Every failure mode that callers are expected to handle programmatically
// gets its own exception type; all of them derive from hp::Error so a CLI
// or test driver can map them onto exit codes in one place.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hp {

using cplx = std::complex<double>;

// A point (x, y) in the two-dimensional parameter plane of the surface
// family.  Interesting behaviour happens on the open set where the wall
// quintic has five simple positive roots; see walls.hpp.
struct ModuliPoint {
    double x = 0.0;
    double y = 0.0;
};

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Domain errors ------------------------------------------------------------

// The parameter point is outside the open set where all five walls are
// present, simple, and positive.
struct NotInU0Error : Error { using Error::Error; };

// A fiber coordinate coincides with a wall (within tolerance), so the gap
// index and branch ordering are undefined there.
struct OnWallError : Error { using Error::Error; };

// The numerically computed branch ordering disagrees with the one the gap
// classification predicts; indicates an inconsistent wall set.
struct TableMismatchError : Error { using Error::Error; };

// Evaluation requested exactly at a branch point of the fiber square root.
struct BranchPointError : Error { using Error::Error; };

// An evaluation point sits on (or too close to) an exceptional locus of a
// birational map, where the map is not defined.
struct ExceptionalLocusError : Error { using Error::Error; };

// Weighted parameters degenerate (leading weight vanishes), so the
// normalized parameter point is not defined.
struct CuspPointError : Error { using Error::Error; };

// Numerical errors ----------------------------------------------------------

// A quadrature rule hit its refinement limit without meeting the tolerance.
struct NoConvergenceError : Error { using Error::Error; };

// A contour integrand jumped to another sheet between adjacent nodes and
// refinement did not cure it.
struct BranchJumpError : Error { using Error::Error; };

// Analytic continuation could not re-identify the tracked periods inside
// the fiber lattice after a step; the step subdivision is too coarse.
struct StepTooCoarseError : Error { using Error::Error; };

// A matrix recovered from transported periods failed to round to integers
// (or rounded to a non-unimodular matrix).
struct NotIntegralError : Error { using Error::Error; };

// Lattice / fixture errors ---------------------------------------------------

// Two arcs meet non-transversally (parallel overlap, or a crossing at a
// polyline vertex), so the intersection count is not well defined.
struct NonTransverseError : Error { using Error::Error; };

// An exact integer identity between stored lattice tables failed.
struct RelationFailedError : Error { using Error::Error; };

// The embedded arc fixture is malformed or fails its self-consistency checks.
struct FixtureError : Error { using Error::Error; };

// Period map errors ----------------------------------------------------------

// The period vector has a (near-)vanishing denominator entry, so the
// normalized coordinates are undefined.
struct DegeneratePeriodsError : Error { using Error::Error; };

// The two normalized coordinates lie in opposite half planes, so neither
// component of the symmetric space contains the pair.
struct ComponentAmbiguousError : Error { using Error::Error; };

} // namespace hp
