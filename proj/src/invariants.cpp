#include "hp/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace hp::invariants {

double klein(double X, double Y) {
    const double q = 5.0 * X * X - Y;
    return -1728.0 * std::pow(X, 5) + 64.0 * q * q + 720.0 * X * X * X * Y -
           80.0 * X * Y * Y + Y * Y * Y;
}

double klein_scale(double X, double Y) {
    const double ax = std::abs(X), ay = std::abs(Y);
    const double q = 5.0 * X * X + ay;
    return 1728.0 * std::pow(ax, 5) + 64.0 * q * q + 720.0 * ax * ax * ax * ay +
           80.0 * ax * ay * ay + ay * ay * ay;
}

double branch_divisor_value(double X, double Y) { return Y * klein(X, Y); }

double branch_divisor_scale(double X, double Y) {
    return std::max(std::abs(Y), 1e-3) * klein_scale(X, Y);
}

double humbert_residual(double l1, double l2, double l3) {
    const double f1 = l1 * l1 * l3 - l2 * l2 + l3 * l3 * (1.0 - l1) +
                      l2 * l2 * l3;
    const double f2 = l1 * l1 * l2 * l3 - l1 * l2 * l2 * l3;
    const double g = l1 * l1 * (l2 + 1.0) * l3 - l2 * l2 * (l1 + l3) +
                     (1.0 - l1) * l2 * l3 * l3 + l1 * (l2 - l3);
    return 4.0 * f1 * f2 - g * g;
}

ModuliPoint xy_from_weighted(double A, double B, double C) {
    const double a3 = std::abs(A) * std::abs(A) * std::abs(A);
    const double scale = std::max({1.0, std::abs(B), std::abs(C)});
    if (!(a3 > 1e-12 * scale))
        throw CuspPointError("xy_from_weighted: A is negligible");
    return ModuliPoint{B / (A * A * A), C / (A * A * A * A * A)};
}

} // namespace hp::invariants
