#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hp/braid.hpp"
#include "hp/homlat.hpp"
#include "hp/types.hpp"
#include "hp/walls.hpp"

using namespace hp;

TEST_SUITE("braid") {

namespace {

// winding number of a closed polyline around a point off the polyline
int winding(const std::vector<cplx>& pts, cplx c) {
    double total = 0.0;
    for (size_t k = 0; k + 1 < pts.size(); ++k)
        total += std::arg((pts[k + 1] - c) / (pts[k] - c));
    return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

} // namespace

TEST_CASE("canonical loops wind once around their wall and nothing else") {
    const walls::WallSet ws = walls::walls({0.5, 0.5});
    for (int j = 0; j <= 5; ++j) {
        CAPTURE(j);
        const braid::Loop L = braid::loop_for(j, ws);
        CHECK(L.wall == j);
        CHECK(L.pts.front() == L.pts.back());
        CHECK(L.radius > 0.0);
        for (int k = 0; k <= 5; ++k) {
            const cplx center{k == 0 ? 0.0 : ws.s[static_cast<size_t>(k - 1)],
                              0.0};
            CHECK(winding(L.pts, center) == (k == j ? 1 : 0));
        }
    }
}

TEST_CASE("a loop around nothing recovers the identity") {
    const ModuliPoint m{0.5, 0.5};
    const walls::WallSet ws = walls::walls(m);
    const double b = 0.5 * (ws.s[1] + ws.s[2]);
    const double r = ws.min_gap / 3.0;
    braid::Loop L;
    L.wall = 0; // unused by continue_periods
    L.radius = r;
    L.pts = {cplx{b, 0.0}, cplx{b, r}, cplx{b + r, r}, cplx{b + r, 0.0},
             cplx{b, 0.0}};
    const braid::Continuation c = braid::continue_periods(m, ws, L, 16);
    const braid::RecoveredMatrix rm = braid::recover_matrix(c);
    CHECK(rm.M == homlat::IMat2::identity());
    CHECK(rm.residual < 1e-8);
}

TEST_CASE("continued periods around each wall give its monodromy matrix") {
    const ModuliPoint m{0.9, 2.0};
    const walls::WallSet ws = walls::walls(m);
    for (int j = 0; j <= 5; ++j) {
        CAPTURE(j);
        const braid::Loop L = braid::loop_for(j, ws);
        const braid::Continuation c =
            braid::continue_periods_adaptive(m, ws, L);
        const braid::RecoveredMatrix rm = braid::recover_matrix(c);
        CHECK(rm.M == homlat::monodromy(j));
        CHECK(rm.residual < 1e-6);
        CHECK(c.max_snap_residual < 0.3);
    }
}

TEST_CASE("steps that swing far around a wall are rejected") {
    const ModuliPoint m{0.5, 0.5};
    const walls::WallSet ws = walls::walls(m);
    const double b = 0.5 * (ws.s[1] + ws.s[2]);
    const double s1 = ws.s[0];
    const double r = ws.min_gap / 3.0;
    // corridor to wall 1 plus a triangle: one step per edge swings the
    // colliding branch pair by 2 pi / 3, far beyond what the lattice snap
    // can identify.  Length-proportional resampling never refines the tiny
    // triangle (the corridor dominates the total length), so no step count
    // cures the loop.
    braid::Loop L;
    L.wall = 1;
    L.radius = r;
    const cplx c0{s1, 0.0};
    const auto vtx = [&](double phi) {
        return c0 + r * cplx{std::cos(phi), std::sin(phi)};
    };
    const double ph0 = std::numbers::pi / 2;
    L.pts = {cplx{b, 0.0},
             cplx{b, r},
             vtx(ph0),
             vtx(ph0 + 2.0 * std::numbers::pi / 3.0),
             vtx(ph0 + 4.0 * std::numbers::pi / 3.0),
             vtx(ph0),
             cplx{b, r},
             cplx{b, 0.0}};
    CHECK_THROWS_AS((void)braid::continue_periods(m, ws, L, 4),
                    StepTooCoarseError);
    CHECK_THROWS_AS((void)braid::continue_periods_adaptive(m, ws, L, 16, 16),
                    StepTooCoarseError);
    // a step count whose snaps happen to pass leaves a silently mangled
    // marking; the unimodularity check at recovery is the backstop
    const braid::Continuation c =
        braid::continue_periods_adaptive(m, ws, L, 4, 64);
    CHECK_THROWS_AS((void)braid::recover_matrix(c), NotIntegralError);
}

TEST_CASE("open polylines are rejected") {
    const ModuliPoint m{0.5, 0.5};
    const walls::WallSet ws = walls::walls(m);
    braid::Loop L;
    L.pts = {cplx{0.4, 0.0}, cplx{0.4, 0.1}, cplx{0.5, 0.1}};
    CHECK_THROWS_AS((void)braid::continue_periods(m, ws, L, 8), Error);
}

} // TEST_SUITE
