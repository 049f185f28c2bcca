// Dense real polynomials with ascending coefficients, plus isolation of
// simple real roots via a derivative (Rolle) tree and bisection/Newton.
#pragma once

#include <vector>

#include "hp/types.hpp"

namespace hp::poly {

// Coefficients in ascending order: p(t) = c[0] + c[1] t + ... + c[n] t^n.
struct RealPoly {
    std::vector<double> c;

    int degree() const;               // index of highest nonzero coefficient
    double operator()(double t) const; // Horner evaluation
    RealPoly derivative() const;
};

// Upper bound on the absolute value of every (real or complex) root:
// 1 + max_i |c_i| / |c_n|.
double cauchy_bound(const RealPoly& p);

// All real roots of p inside [lo, hi], ascending, assuming they are simple.
// Each root is bracketed between consecutive critical points of p (obtained
// recursively from the derivative chain) and then polished by bisection
// followed by Newton steps.  Roots closer together than `separation_floor`
// are reported as-is; deciding whether they are genuinely distinct is the
// caller's job.
std::vector<double> real_roots_in(const RealPoly& p, double lo, double hi);

// Largest |c_i| * max(1, B)^i over all terms, a scale for residual tests at
// points of magnitude up to B.
double residual_scale(const RealPoly& p, double B);

} // namespace hp::poly
