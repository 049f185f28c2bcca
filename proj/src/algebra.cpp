#include "hp/algebra.hpp"

#include <cmath>

namespace hp::algebra {

namespace {

constexpr cplx kI{0.0, 1.0};

cplx P_poly(const Params& q, cplx y) {
    return 20.0 * q.A * y * y - 20.0 * q.B * y + q.C;
}

cplx p_poly(const Params& q, cplx y) {
    return 5.0 * q.A * y * y - 10.0 * q.B * y + q.C;
}

} // namespace

cplx residual_S(const Params& q, const PointS& P) {
    const cplx x = P.x, y = P.y, z = P.z;
    return z * z - (x * x * x - 4.0 * y * y * (4.0 * y - 5.0 * q.A) * x * x +
                    20.0 * q.B * y * y * y * x + q.C * y * y * y * y);
}

cplx residual_T(const Params& q, const PointT& P) {
    const cplx x = P.x, y = P.y, z = P.z;
    const cplx y5 = y * y * y * y * y;
    return z * z - x * (x * x + P_poly(q, y) * x + 16.0 * y5);
}

cplx residual_K(const Params& q, const PointK& P) {
    const cplx u = P.u, y = P.y, v = P.v;
    const cplx y5 = y * y * y * y * y;
    return v * v - (u * u - 2.0 * y5) * (u - p_poly(q, y));
}

double residual_scale_S(const Params& q, const PointS& P) {
    const double x = std::abs(P.x), y = std::abs(P.y), z = std::abs(P.z);
    return z * z + x * x * x + 16.0 * y * y * y * x * x +
           20.0 * std::abs(q.A) * y * y * x * x +
           20.0 * std::abs(q.B) * y * y * y * x +
           std::abs(q.C) * y * y * y * y;
}

double residual_scale_T(const Params& q, const PointT& P) {
    const double x = std::abs(P.x), y = std::abs(P.y), z = std::abs(P.z);
    const double y2 = y * y;
    return z * z + x * x * x +
           (20.0 * std::abs(q.A) * y2 + 20.0 * std::abs(q.B) * y +
            std::abs(q.C)) * x * x +
           16.0 * y2 * y2 * y * x;
}

double residual_scale_K(const Params& q, const PointK& P) {
    const double u = std::abs(P.u), y = std::abs(P.y), v = std::abs(P.v);
    const double y5 = y * y * y * y * y;
    const double p = 5.0 * std::abs(q.A) * y * y + 10.0 * std::abs(q.B) * y +
                     std::abs(q.C);
    return v * v + u * u * u + u * u * p + 2.0 * y5 * u + 2.0 * y5 * p;
}

PointS map_T_to_S(const PointT& P, double floor) {
    if (std::abs(P.y) <= floor)
        throw ExceptionalLocusError("map_T_to_S: y1 is on the exceptional locus");
    const cplx y2 = P.y * P.y;
    return PointS{P.x / (16.0 * P.y), -P.x / (16.0 * y2),
                  P.x * P.z / (256.0 * y2 * y2)};
}

PointK map_T_to_K(const Params& q, const PointT& P, double floor) {
    if (std::abs(P.x) <= floor || std::abs(P.z) <= floor)
        throw ExceptionalLocusError("map_T_to_K: x1 = 0 or z1 = 0");
    const cplx y5 = P.y * P.y * P.y * P.y * P.y;
    const cplx u = -(P.x + 16.0 * y5 / P.x);
    const cplx y = 2.0 * P.y;
    const cplx v1 = (P.x * P.x - 16.0 * y5) / P.z;
    const cplx v = -kI * v1 * (u - p_poly(q, y));
    return PointK{u, y, v};
}

PointT iota(const PointT& P, double floor) {
    if (std::abs(P.x) <= floor)
        throw ExceptionalLocusError("iota: x1 = 0");
    const cplx y5 = P.y * P.y * P.y * P.y * P.y;
    return PointT{16.0 * y5 / P.x, P.y, -16.0 * y5 * P.z / (P.x * P.x)};
}

PointT lift_T(const Params& q, cplx x1, cplx y1) {
    const cplx y5 = y1 * y1 * y1 * y1 * y1;
    const cplx rhs = x1 * (x1 * x1 + P_poly(q, y1) * x1 + 16.0 * y5);
    return PointT{x1, y1, std::sqrt(rhs)};
}

Params scale_params(const Params& q, double lambda) {
    return Params{q.A * lambda, q.B * std::pow(lambda, 3),
                  q.C * std::pow(lambda, 5)};
}

PointT scale_T(const PointT& P, double lambda) {
    return PointT{P.x * std::pow(lambda, 5), P.y * lambda * lambda,
                  P.z * std::pow(lambda, 7.5)};
}

PointS scale_S(const PointS& P, double lambda) {
    return PointS{P.x * std::pow(lambda, 3), P.y * lambda,
                  P.z * std::pow(lambda, 4.5)};
}

PointK scale_K(const PointK& P, double lambda) {
    return PointK{P.u * std::pow(lambda, 5), P.y * lambda * lambda,
                  P.v * std::pow(lambda, 7.5)};
}

} // namespace hp::algebra
