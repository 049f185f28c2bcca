#include "hp/walls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace hp::walls {

poly::RealPoly wall_quintic(const ModuliPoint& m) {
    const double X = m.x, Y = m.y;
    return poly::RealPoly{{-Y * Y, 20.0 * X * Y, -(100.0 * X * X + 10.0 * Y),
                           100.0 * X, -25.0, 2.0}};
}

WallSet walls(const ModuliPoint& m) {
    const poly::RealPoly D = wall_quintic(m);
    std::ostringstream at;
    at << "(" << m.x << ", " << m.y << ")";
    const double bound = poly::cauchy_bound(D);
    const auto roots = poly::real_roots_in(D, 0.0, bound);
    std::vector<double> pos;
    for (double r : roots)
        if (r > 0.0) pos.push_back(r);
    if (pos.size() != 5)
        throw NotInU0Error("wall quintic has " + std::to_string(pos.size()) +
                           " positive real roots (need 5) at " + at.str());
    WallSet ws;
    std::copy(pos.begin(), pos.end(), ws.s.begin());
    ws.min_gap = ws.s[0];
    for (int i = 1; i < 5; ++i)
        ws.min_gap = std::min(ws.min_gap, ws.s[i] - ws.s[i - 1]);
    const double scale = poly::residual_scale(D, ws.s[4]);
    for (double r : ws.s)
        ws.root_residual = std::max(ws.root_residual, std::abs(D(r)));
    if (!(ws.min_gap > 0.0) || ws.root_residual > 1e-10 * scale)
        throw NotInU0Error("wall roots are not well separated/refined at " + at.str());
    return ws;
}

bool in_U0(const ModuliPoint& m) {
    try {
        (void)walls(m);
        return true;
    } catch (const NotInU0Error&) {
        return false;
    }
}

BranchValues branch_values(double y, const ModuliPoint& m) {
    BranchValues b;
    b.alpha = y * y * std::sqrt(2.0 * y);
    b.beta = -b.alpha;
    b.p = 5.0 * y * y - 10.0 * m.x * y + m.y;
    return b;
}

int gap_index(double y, const WallSet& ws, double wall_tol) {
    const double tol = wall_tol * ws.s[4];
    if (y <= tol)
        throw OnWallError("fiber coordinate " + std::to_string(y) +
                          " is not strictly positive");
    int g = 0;
    for (int j = 0; j < 5; ++j) {
        if (std::abs(y - ws.s[j]) <= tol)
            throw OnWallError("fiber coordinate " + std::to_string(y) +
                              " lies on wall " + std::to_string(j + 1));
        if (y > ws.s[j]) g = j + 1;
    }
    return g;
}

std::array<Branch, 3> gap_pattern(int gap) {
    // Ascending branch ordering per gap.  A collision of p with alpha or
    // beta swaps two adjacent labels at each wall; the resulting sequence is
    //   gap 0: (beta, alpha, p)   gap 1: (beta, p, alpha)
    //   gap 2: (p, beta, alpha)   gap 3: (beta, p, alpha)
    //   gap 4: (beta, alpha, p)   gap 5: (beta, p, alpha)
    using B = Branch;
    switch (gap) {
        case 0: return {B::Beta, B::Alpha, B::P};
        case 1: return {B::Beta, B::P, B::Alpha};
        case 2: return {B::P, B::Beta, B::Alpha};
        case 3: return {B::Beta, B::P, B::Alpha};
        case 4: return {B::Beta, B::Alpha, B::P};
        case 5: return {B::Beta, B::P, B::Alpha};
        default: throw Error("gap index out of range");
    }
}

Ordering ordering_at(double y, const WallSet& ws, const ModuliPoint& m) {
    Ordering ord;
    ord.gap = gap_index(y, ws);
    const BranchValues b = branch_values(y, m);
    struct Entry { double v; Branch which; };
    std::array<Entry, 3> e{{{b.beta, Branch::Beta},
                            {b.alpha, Branch::Alpha},
                            {b.p, Branch::P}}};
    std::sort(e.begin(), e.end(),
              [](const Entry& l, const Entry& r) { return l.v < r.v; });
    const auto expect = gap_pattern(ord.gap);
    for (int i = 0; i < 3; ++i) {
        ord.w[i] = e[static_cast<size_t>(i)].v;
        ord.which[i] = e[static_cast<size_t>(i)].which;
        if (ord.which[i] != expect[static_cast<size_t>(i)])
            throw TableMismatchError(
                "sorted branch values at y = " + std::to_string(y) +
                " do not follow the expected pattern for gap " +
                std::to_string(ord.gap));
    }
    return ord;
}

std::array<Chamber, 4> chambers(const WallSet& ws) {
    const auto nan = std::numeric_limits<double>::quiet_NaN();
    std::array<Chamber, 4> R;
    // R1: 0 < y < s2, u between the lowest two branch points (phase -1).
    R[0] = Chamber{0.0, ws.s[1], 0, {ws.s[0], nan}, 1, cplx{-1.0, 0.0}};
    // R2: s1 < y < s4, u between the upper two (phase -i).
    R[1] = Chamber{ws.s[0], ws.s[3], 1, {ws.s[1], ws.s[2]}, 2, cplx{0.0, -1.0}};
    // R3: s2 < y < s3, u between the lowest two (phase -1).
    R[2] = Chamber{ws.s[1], ws.s[2], 0, {nan, nan}, 0, cplx{-1.0, 0.0}};
    // R4: s4 < y < s5, u between the upper two (phase -i).
    R[3] = Chamber{ws.s[3], ws.s[4], 1, {nan, nan}, 0, cplx{0.0, -1.0}};
    return R;
}

cplx inv_phase(int below) {
    switch (below) {
        case 0: return {0.0, 1.0};   //  i
        case 1: return {-1.0, 0.0};  // -1
        case 2: return {0.0, -1.0};  // -i
        case 3: return {1.0, 0.0};   // +1
        default: throw Error("inv_phase: region index out of range");
    }
}

cplx F_real(double u, double y, const ModuliPoint& m, double bp_tol) {
    const BranchValues b = branch_values(y, m);
    std::array<double, 3> ws{b.beta, b.alpha, b.p};
    std::sort(ws.begin(), ws.end());
    cplx F{1.0, 0.0};
    for (double wk : ws) {
        if (std::abs(u - wk) <= bp_tol)
            throw BranchPointError("u = " + std::to_string(u) +
                                   " coincides with a branch point");
        if (u > wk) F *= std::sqrt(u - wk);
        else F *= cplx{0.0, 1.0} * std::sqrt(wk - u);
    }
    return F;
}

double F_gap_abs(const Ordering& ord, int slot, double u, double du_lo,
                 double du_hi) {
    // |F| on (w[slot], w[slot+1]) with exact endpoint offsets; the third
    // branch point is at a safe distance and evaluated directly.
    const double other = slot == 0 ? ord.w[2] - u : u - ord.w[0];
    return std::sqrt(du_lo * du_hi * other);
}

} // namespace hp::walls
