// The three birational models of the surface and the maps between them.
//
// With weighted parameters (A, B, C) (weights 1, 3, 5) the models are
//   S:  z0^2 = x0^3 - 4 y0^2 (4 y0 - 5A) x0^2 + 20 B y0^3 x0 + C y0^4
//   T:  z1^2 = x1 (x1^2 + P(y1) x1 + 16 y1^5),  P(y) = 20A y^2 - 20B y + C
//   K:  v^2  = (u^2 - 2 y^5) (u - p(y)),        p(y) = 5A y^2 - 10B y + C
// with coordinate weights (x0,y0,z0) = (3,1,4.5), (x1,y1,z1) = (5,2,7.5),
// (u,y,v) = (5,2,7.5).  The normalized parameter point is
// (X, Y) = (B/A^3, C/A^5).
#pragma once

#include "hp/types.hpp"

namespace hp::algebra {

struct Params {
    double A = 1.0;
    double B = 0.0;
    double C = 0.0;
};

struct PointS { cplx x, y, z; };
struct PointT { cplx x, y, z; };
struct PointK { cplx u, y, v; };

// Defining-equation residuals (left minus right, unnormalized).
cplx residual_S(const Params& q, const PointS& P);
cplx residual_T(const Params& q, const PointT& P);
cplx residual_K(const Params& q, const PointK& P);

// Sum of the absolute values of the individual equation terms, for turning
// the raw residuals into relative ones.
double residual_scale_S(const Params& q, const PointS& P);
double residual_scale_T(const Params& q, const PointT& P);
double residual_scale_K(const Params& q, const PointK& P);

// x0 = x1/(16 y1), y0 = -x1/(16 y1^2), z0 = x1 z1 / (256 y1^4).
// Exceptional locus: y1 = 0.
PointS map_T_to_S(const PointT& P, double floor = 1e-12);

// u = -(x1 + 16 y1^5/x1), y = 2 y1, v = -i v1 (u - p(y)) with
// v1 = (x1^2 - 16 y1^5)/z1.  Exceptional locus: x1 = 0 or z1 = 0.
PointK map_T_to_K(const Params& q, const PointT& P, double floor = 1e-12);

// The fiberwise involution (x1, y1, z1) -> (16 y1^5/x1, y1, -16 y1^5 z1/x1^2).
// Exceptional locus: x1 = 0.
PointT iota(const PointT& P, double floor = 1e-12);

// Completes (x1, y1) to a point on T by one square root (principal branch).
PointT lift_T(const Params& q, cplx x1, cplx y1);

// Scales a point and parameters by lambda with the listed weights; the
// residuals then scale by lambda^9 (S) and lambda^15 (T, K) exactly.
Params scale_params(const Params& q, double lambda);
PointT scale_T(const PointT& P, double lambda);
PointS scale_S(const PointS& P, double lambda);
PointK scale_K(const PointK& P, double lambda);

} // namespace hp::algebra
