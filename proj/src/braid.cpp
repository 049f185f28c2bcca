#include "hp/braid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hp::braid {

namespace {

constexpr cplx kI{0.0, 1.0};

// ---------------------------------------------------------------------------
// Loop construction.

void append_circle(std::vector<cplx>& pts, cplx center, double r,
                   double phi0) {
    // Full counterclockwise circle as a 24-gon starting and ending at phi0.
    constexpr int kSides = 24;
    for (int k = 1; k <= kSides; ++k) {
        const double phi = phi0 + 2.0 * M_PI * k / kSides;
        pts.push_back(center + r * cplx{std::cos(phi), std::sin(phi)});
    }
}

} // namespace

Loop loop_for(int j, const walls::WallSet& ws) {
    if (j < 0 || j > 5) throw Error("loop_for: wall index out of range");
    Loop L;
    L.wall = j;
    L.radius = ws.min_gap / 3.0;
    const double r = L.radius;
    const double b = 0.5 * (ws.s[1] + ws.s[2]);
    const double cx = j == 0 ? 0.0 : ws.s[static_cast<size_t>(j - 1)];
    // Walls 0..2 carry downward cuts: travel above the axis and join the
    // counterclockwise circle at its top, so only the target cut is crossed
    // (once, moving left to right under the wall).  Walls 3..5 carry upward
    // cuts: mirror through the lower half plane, joining at the bottom.
    const double side = j <= 2 ? +1.0 : -1.0;
    const cplx lift{b, side * r};
    const cplx join{cx, side * r};
    L.pts.push_back(cplx{b, 0.0});
    L.pts.push_back(lift);
    L.pts.push_back(join);
    append_circle(L.pts, cplx{cx, 0.0}, r, side > 0 ? 0.5 * M_PI : 1.5 * M_PI);
    L.pts.push_back(lift);
    L.pts.push_back(cplx{b, 0.0});
    return L;
}

namespace {

// ---------------------------------------------------------------------------
// Per-fiber period lattice from straight-segment integrals.

struct TrackedFiber {
    cplx alpha;  // sqrt(2) y^{5/2} with continuous argument of y
    cplx beta;   // -alpha
    cplx p;      // 5 y^2 - 10 X y + Y
};

TrackedFiber fiber_at(cplx y, double theta, const ModuliPoint& m) {
    TrackedFiber f;
    const double mag = std::sqrt(2.0) * std::pow(std::abs(y), 2.5);
    f.alpha = mag * std::exp(kI * (2.5 * theta));
    f.beta = -f.alpha;
    f.p = 5.0 * y * y - 10.0 * m.x * y + m.y;
    return f;
}

// Half period of du/F along the segment from a to b, with c the remaining
// branch point.  Writing u = a + (b - a) s turns sqrt((u-a)(u-b)) into
// i (b-a) sqrt(s(1-s)) for one fixed branch choice, so
//
//     seg = int_0^1 ds / ( i sqrt(s (1-s)) sqrt(u(s) - c) ),
//
// where sqrt(u - c) follows the branch continuously along the segment: the
// direction from c to a straight segment sweeps less than pi, so the angle
// relative to the start vector stays in (-pi, pi) and atan2 recovers it.
cplx segment_half_period(cplx a, cplx b, cplx c, const quad::QuadSpec& spec) {
    const cplx v0 = a - c;
    const double phi0 = std::arg(v0);
    const cplx d = b - a;
    const auto f = [&](double s, double ds0, double ds1) -> cplx {
        const cplx u = a + d * s;
        const cplx v = u - c;
        const double dot = v0.real() * v.real() + v0.imag() * v.imag();
        const double cross = v0.real() * v.imag() - v0.imag() * v.real();
        const double phi = phi0 + std::atan2(cross, dot);
        const cplx root =
            std::sqrt(std::abs(v)) * std::exp(kI * (0.5 * phi));
        return 1.0 / (kI * std::sqrt(ds0 * ds1) * root);
    };
    const quad::QuadResult r =
        quad::integrate_de_parallel_w(f, 0.0, 1.0, spec);
    quad::require_converged(r, "segment period integral");
    return r.value;
}

struct StepLattice {
    cplx g, h; // full periods: twice the two segment half-periods
};

// Basis of the period lattice at one fiber: label the branch point opposite
// the longest triangle side as the middle vertex, integrate over the two
// short sides.  Neither segment then passes near the remaining point, and
// the two segment cycles form a lattice basis.
StepLattice step_lattice(const TrackedFiber& f, const quad::QuadSpec& spec) {
    const std::array<cplx, 3> pt{f.beta, f.alpha, f.p};
    const double d01 = std::abs(pt[0] - pt[1]);
    const double d12 = std::abs(pt[1] - pt[2]);
    const double d02 = std::abs(pt[0] - pt[2]);
    int mid;
    if (d12 >= d01 && d12 >= d02) mid = 0;      // longest side (1,2)
    else if (d02 >= d01 && d02 >= d12) mid = 1; // longest side (0,2)
    else mid = 2;                               // longest side (0,1)
    const int lo = mid == 0 ? 1 : 0;
    const int hi = mid == 2 ? 1 : 2;
    const cplx a = pt[static_cast<size_t>(lo)];
    const cplx b = pt[static_cast<size_t>(mid)];
    const cplx c = pt[static_cast<size_t>(hi)];
    StepLattice L;
    L.g = 2.0 * segment_half_period(a, b, c, spec);
    L.h = 2.0 * segment_half_period(b, c, a, spec);
    return L;
}

struct SnapResult {
    cplx value;
    double residual;
};

// Express p in the lattice basis (g, h) by a real 2x2 solve, round to the
// nearest integer pair, and return the exact lattice element.
SnapResult snap_to_lattice(cplx p, const StepLattice& L, const char* what) {
    const double det = L.g.real() * L.h.imag() - L.g.imag() * L.h.real();
    const double scale = std::abs(L.g) * std::abs(L.h);
    if (!(std::abs(det) > 1e-9 * scale))
        throw DegeneratePeriodsError(std::string(what) +
                                     ": period lattice is degenerate");
    const double x1 = (p.real() * L.h.imag() - p.imag() * L.h.real()) / det;
    const double x2 = (L.g.real() * p.imag() - L.g.imag() * p.real()) / det;
    const double n1 = std::round(x1), n2 = std::round(x2);
    const double res = std::max(std::abs(x1 - n1), std::abs(x2 - n2));
    if (res > 0.3)
        throw StepTooCoarseError(std::string(what) +
                                 ": snap residual " + std::to_string(res));
    return SnapResult{n1 * L.g + n2 * L.h, res};
}

// Resample a polyline so no edge is longer than the target step.
std::vector<cplx> resample(const std::vector<cplx>& pts, int n_steps) {
    double total = 0.0;
    for (size_t k = 0; k + 1 < pts.size(); ++k)
        total += std::abs(pts[k + 1] - pts[k]);
    const double target = total / std::max(1, n_steps);
    std::vector<cplx> out;
    out.push_back(pts.front());
    for (size_t k = 0; k + 1 < pts.size(); ++k) {
        const cplx a = pts[k], b = pts[k + 1];
        const double len = std::abs(b - a);
        const int pieces = std::max(1, static_cast<int>(std::ceil(len / target)));
        for (int i = 1; i <= pieces; ++i)
            out.push_back(a + (b - a) * (static_cast<double>(i) / pieces));
    }
    return out;
}

} // namespace

Continuation continue_periods(const ModuliPoint& m, const walls::WallSet& ws,
                              const Loop& loop, int n_steps,
                              const quad::QuadSpec& spec) {
    if (loop.pts.size() < 2 || std::abs(loop.pts.front() - loop.pts.back()) != 0.0)
        throw Error("continue_periods: loop must be a closed polyline");
    Continuation c;
    c.start = efiber::periods_at_base(m, ws, spec);
    const std::vector<cplx> path = resample(loop.pts, n_steps);
    cplx p1 = c.start.pi1, p2 = c.start.pi2;
    double theta = std::arg(path.front());
    for (size_t k = 1; k < path.size(); ++k) {
        const cplx y = path[k];
        theta += std::arg(y / path[k - 1]);
        const StepLattice L = step_lattice(fiber_at(y, theta, m), spec);
        const SnapResult s1 = snap_to_lattice(p1, L, "pi1");
        const SnapResult s2 = snap_to_lattice(p2, L, "pi2");
        p1 = s1.value;
        p2 = s2.value;
        c.max_snap_residual =
            std::max({c.max_snap_residual, s1.residual, s2.residual});
    }
    c.pi1_end = p1;
    c.pi2_end = p2;
    c.steps_used = static_cast<int>(path.size()) - 1;
    return c;
}

Continuation continue_periods_adaptive(const ModuliPoint& m,
                                       const walls::WallSet& ws,
                                       const Loop& loop, int n_steps,
                                       int max_steps,
                                       const quad::QuadSpec& spec) {
    for (int n = n_steps;; n *= 2) {
        try {
            return continue_periods(m, ws, loop, n, spec);
        } catch (const StepTooCoarseError&) {
            if (2 * n > max_steps) throw;
        }
    }
}

RecoveredMatrix recover_matrix(const Continuation& c) {
    const cplx g = c.start.pi1, h = c.start.pi2;
    const double det = g.real() * h.imag() - g.imag() * h.real();
    if (!(std::abs(det) > 1e-9 * std::abs(g) * std::abs(h)))
        throw DegeneratePeriodsError("recover_matrix: starting periods are degenerate");
    RecoveredMatrix rm;
    const std::array<cplx, 2> ends{c.pi1_end, c.pi2_end};
    for (int i = 0; i < 2; ++i) {
        const cplx p = ends[static_cast<size_t>(i)];
        const double x1 = (p.real() * h.imag() - p.imag() * h.real()) / det;
        const double x2 = (g.real() * p.imag() - g.imag() * p.real()) / det;
        const double n1 = std::round(x1), n2 = std::round(x2);
        rm.residual = std::max(
            {rm.residual, std::abs(x1 - n1), std::abs(x2 - n2)});
        if (rm.residual > 0.25)
            throw NotIntegralError("recover_matrix: entry is not close to an integer");
        rm.M.a[static_cast<size_t>(i)][0] = static_cast<long>(n1);
        rm.M.a[static_cast<size_t>(i)][1] = static_cast<long>(n2);
    }
    const long d = rm.M.det();
    if (d != 1 && d != -1)
        throw NotIntegralError("recover_matrix: matrix is not unimodular");
    return rm;
}

} // namespace hp::braid
