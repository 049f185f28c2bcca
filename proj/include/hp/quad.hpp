// Double-exponential quadrature for complex-valued integrands.
//
// Three rules are provided:
//   * integrate_de        - tanh-sinh on a finite interval; tolerates
//                           integrable endpoint singularities,
//   * integrate_semi_inf  - exp-sinh on (a, +inf) (or (-inf, a) mirrored),
//   * integrate_contour   - piecewise-linear contour in the complex plane
//                           with a branch-continuity monitor.
//
// Integrands with endpoint singularities lose up to half the working
// precision if they must reconstruct (t - a) from the node t itself, because
// the node is formed as a + offset.  The *_w variants therefore hand the
// integrand the exact offsets from both endpoints so that singular factors
// can be evaluated without cancellation.
#pragma once

#include <functional>

#include "hp/types.hpp"

namespace hp::quad {

struct QuadSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_level = 10;   // each level halves the node spacing
};

struct QuadResult {
    cplx value{0.0, 0.0};
    double err_est = 0.0; // difference between the last two refinement levels
    long evals = 0;
    bool converged = false;
};

// f(t) on the open interval (a, b), a < b finite.
QuadResult integrate_de(const std::function<cplx(double)>& f,
                        double a, double b, const QuadSpec& spec = {});

// f(t, da, db) with t = a + da = b - db; da, db > 0 are exact to rounding.
QuadResult integrate_de_w(const std::function<cplx(double, double, double)>& f,
                          double a, double b, const QuadSpec& spec = {});

// Same rule and result as integrate_de_w, but the nodes of each refinement
// level are evaluated through par::parallel_for (each node writes its own
// slot) and summed serially in node order, so the result is byte-identical
// to the serial variant for every thread count.  Use for expensive
// integrands such as inner integrals.
QuadResult integrate_de_parallel_w(
    const std::function<cplx(double, double, double)>& f,
    double a, double b, const QuadSpec& spec = {});

// f(t) on (a, +inf); the integrand must decay faster than 1/t at infinity.
QuadResult integrate_semi_inf(const std::function<cplx(double)>& f,
                              double a, const QuadSpec& spec = {});

// f(t, da) with t = a + da on (a, +inf); da exact.
QuadResult integrate_semi_inf_w(const std::function<cplx(double, double)>& f,
                                double a, const QuadSpec& spec = {});

// f(t) on (-inf, a).
QuadResult integrate_semi_inf_down(const std::function<cplx(double)>& f,
                                   double a, const QuadSpec& spec = {});

// Contour integral of f along the polyline z[0] -> z[1] -> ... -> z.back().
// Each segment is integrated by a trapezoid-refinement rule whose nodes are
// also used to watch the phase of f: a jump of more than pi/2 between
// adjacent nodes triggers refinement, and a jump that survives `max_level`
// refinements raises BranchJumpError (the integrand moved to another sheet).
QuadResult integrate_contour(const std::function<cplx(cplx)>& f,
                             const std::vector<cplx>& z,
                             const QuadSpec& spec = {});

// Throws NoConvergenceError if r.converged is false; returns r otherwise.
const QuadResult& require_converged(const QuadResult& r, const char* what);

} // namespace hp::quad
