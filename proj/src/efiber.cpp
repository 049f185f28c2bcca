#include "hp/efiber.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hp::efiber {

double carlson_rf(double x, double y, double z) {
    if (x < 0.0 || y < 0.0 || z < 0.0 ||
        (x == 0.0) + (y == 0.0) + (z == 0.0) > 1)
        throw Error("carlson_rf: arguments must be nonnegative, at most one zero");
    // Duplication: each round replaces (x, y, z) by the quarter-shifted
    // triple, shrinking the spread around the mean by 4 while preserving
    // R_F; stop once the fifth-order Taylor tail is below roundoff.
    const double a0 = (x + y + z) / 3.0;
    const double q = std::pow(3.0e-16, -1.0 / 6.0) *
                     std::max({std::abs(a0 - x), std::abs(a0 - y),
                               std::abs(a0 - z)});
    double xt = x, yt = y, zt = z, at = a0;
    double pow4 = 1.0;
    for (int it = 0; it < 120 && q > std::abs(at) * pow4; ++it) {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lam = sx * sy + sy * sz + sz * sx;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        at = 0.25 * (at + lam);
        pow4 *= 4.0;
    }
    const double X = (a0 - x) / (pow4 * at);
    const double Y = (a0 - y) / (pow4 * at);
    const double Z = -X - Y;
    const double e2 = X * Y - Z * Z;
    const double e3 = X * Y * Z;
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 -
            3.0 * e2 * e3 / 44.0) /
           std::sqrt(at);
}

GapMagnitudes gap_magnitudes_rf(const walls::Ordering& ord) {
    const double d21 = ord.w[1] - ord.w[0];
    const double d31 = ord.w[2] - ord.w[0];
    const double d32 = ord.w[2] - ord.w[1];
    GapMagnitudes g;
    g.j12 = 2.0 * carlson_rf(0.0, d32, d31);
    g.j23 = 2.0 * carlson_rf(0.0, d21, d31);
    return g;
}

GapMagnitudes gap_magnitudes_de(const walls::Ordering& ord,
                                const quad::QuadSpec& spec) {
    GapMagnitudes g;
    const auto f12 = [&ord](double u, double da, double db) {
        return cplx{1.0 / walls::F_gap_abs(ord, 0, u, da, db), 0.0};
    };
    const auto f23 = [&ord](double u, double da, double db) {
        return cplx{1.0 / walls::F_gap_abs(ord, 1, u, da, db), 0.0};
    };
    g.j12 = quad::require_converged(
                quad::integrate_de_w(f12, ord.w[0], ord.w[1], spec),
                "du/|F| over (w1, w2)")
                .value.real();
    g.j23 = quad::require_converged(
                quad::integrate_de_w(f23, ord.w[1], ord.w[2], spec),
                "du/|F| over (w2, w3)")
                .value.real();
    return g;
}

std::array<cplx, 4> fiber_contour_gaps(double y, const walls::WallSet& ws,
                                       const ModuliPoint& m,
                                       const quad::QuadSpec& spec) {
    const walls::Ordering ord = walls::ordering_at(y, ws, m);
    const GapMagnitudes g = gap_magnitudes_de(ord, spec);
    // Tails, shifted so the finite endpoint sits at 0 and the offset from
    // it is the node itself (exact); both decay like v^{-3/2}.
    const double d21 = ord.w[1] - ord.w[0];
    const double d31 = ord.w[2] - ord.w[0];
    const double d32 = ord.w[2] - ord.w[1];
    const auto lo = [&](double, double dv) {
        return cplx{1.0 / std::sqrt(dv * (d21 + dv) * (d31 + dv)), 0.0};
    };
    const auto hi = [&](double, double dv) {
        return cplx{1.0 / std::sqrt((d31 + dv) * (d32 + dv) * dv), 0.0};
    };
    const double jlo = quad::require_converged(
                           quad::integrate_semi_inf_w(lo, 0.0, spec),
                           "du/|F| over (-inf, w1)")
                           .value.real();
    const double jhi = quad::require_converged(
                           quad::integrate_semi_inf_w(hi, 0.0, spec),
                           "du/|F| over (w3, inf)")
                           .value.real();
    // 1/F just above the real axis carries phases +i, -1, -i, +1 on the
    // four intervals, lowest first.
    return {cplx{0.0, 1.0} * jlo, cplx{-1.0, 0.0} * g.j12,
            cplx{0.0, -1.0} * g.j23, cplx{1.0, 0.0} * jhi};
}

namespace {

cplx combine_half_period(int gap, Cycle c, const GapMagnitudes& g) {
    // See the table in the header.  The tail magnitude over (w3, inf)
    // equals j12 exactly, so gaps 0 and 4 share one expression.
    const cplx i{0.0, 1.0};
    switch (gap) {
        case 0:
        case 4:
            return c == Cycle::One ? cplx{g.j12, -g.j23} : cplx{g.j12, 0.0};
        case 1:
        case 3:
        case 5:
            return c == Cycle::One ? cplx{g.j12, 0.0} : cplx{g.j12, g.j23};
        case 2:
            return c == Cycle::One ? cplx{g.j12, 0.0} : i * g.j23;
        default:
            throw Error("half_period: gap index out of range");
    }
}

} // namespace

cplx half_period(double y, Cycle c, const walls::WallSet& ws,
                 const ModuliPoint& m, const quad::QuadSpec& spec) {
    const walls::Ordering ord = walls::ordering_at(y, ws, m);
    return combine_half_period(ord.gap, c, gap_magnitudes_de(ord, spec));
}

cplx half_period_rf(double y, Cycle c, const walls::WallSet& ws,
                    const ModuliPoint& m) {
    const walls::Ordering ord = walls::ordering_at(y, ws, m);
    return combine_half_period(ord.gap, c, gap_magnitudes_rf(ord));
}

FiberPeriods periods_at_base(const ModuliPoint& m, const walls::WallSet& ws,
                             const quad::QuadSpec& spec) {
    FiberPeriods fp;
    fp.base = 0.5 * (ws.s[1] + ws.s[2]);
    fp.pi1 = 2.0 * half_period(fp.base, Cycle::One, ws, m, spec);
    fp.pi2 = 2.0 * half_period(fp.base, Cycle::Two, ws, m, spec);
    return fp;
}

double vanishing_period_limit(int j, const walls::WallSet& ws,
                              const ModuliPoint& m) {
    if (j == 0) {
        // All three branch points of the y -> 0 fiber tend to {0, 0, Y}.
        if (!(m.y > 0.0)) throw Error("vanishing_period_limit: Y must be positive");
        return M_PI / std::sqrt(m.y);
    }
    if (j < 1 || j > 5) throw Error("vanishing_period_limit: wall index out of range");
    const walls::BranchValues b = walls::branch_values(ws.s[j - 1], m);
    // p collides with whichever of +-alpha it touches at this wall; the far
    // branch point is the mirror image, so the separation is 2 alpha.
    double w_col, w_far;
    if (std::abs(b.p - b.alpha) <= std::abs(b.p - b.beta)) {
        w_col = 0.5 * (b.p + b.alpha);
        w_far = b.beta;
    } else {
        w_col = 0.5 * (b.p + b.beta);
        w_far = b.alpha;
    }
    return M_PI / std::sqrt(std::abs(w_far - w_col));
}

std::array<long, 2> vanishing_cycle(int j) {
    switch (j) {
        case 0: return {0, 1};
        case 1:
        case 4:
        case 5: return {1, -1};
        case 2:
        case 3: return {1, 0};
        default: throw Error("vanishing_cycle: wall index out of range");
    }
}

} // namespace hp::efiber
