#include "doctest.h"

#include <cmath>

#include "hp/periodmap.hpp"
#include "hp/types.hpp"
#include "hp/walls.hpp"

using namespace hp;
using periodmap::PeriodVector;

namespace {

double norm_inf(const PeriodVector& pv) {
    double s = 0.0;
    for (const cplx& v : pv.xi) s = std::max(s, std::abs(v));
    return s;
}

// periods at (0.5, 0.5) computed independently with 50-digit arithmetic
const cplx kXi05[4] = {
    {0.0, -14.4936281263825603},
    {0.0, -9.25981410292527807},
    {-12.8673586455045219, 0.0},
    {2.09584856645815244, 0.0},
};

} // namespace

TEST_SUITE("periodmap") {

TEST_CASE("fiberwise periods match independently computed values") {
    const ModuliPoint m{0.5, 0.5};
    const walls::WallSet ws = walls::walls(m);
    const PeriodVector pv = periodmap::periods_fiberwise(m, ws);
    const double scale = norm_inf(pv);
    for (int k = 0; k < 4; ++k) {
        CAPTURE(k);
        CHECK(std::abs(pv.xi[static_cast<size_t>(k)] -
                       kXi05[static_cast<size_t>(k)]) <= 1e-8 * scale);
    }
    // xi1, xi2 are purely imaginary and xi3, xi4 purely real here
    CHECK(std::abs(pv.xi[0].real()) <= 1e-11 * scale);
    CHECK(std::abs(pv.xi[1].real()) <= 1e-11 * scale);
    CHECK(std::abs(pv.xi[2].imag()) <= 1e-11 * scale);
    CHECK(std::abs(pv.xi[3].imag()) <= 1e-11 * scale);
    CHECK(pv.err_est < 1e-8 * scale);
}

TEST_CASE("chamber-integral periods agree with the fiberwise route") {
    const ModuliPoint m{0.5, 0.5};
    const walls::WallSet ws = walls::walls(m);
    const PeriodVector pv = periodmap::periods_chambers(m, ws);
    const double scale = norm_inf(pv);
    for (int k = 0; k < 4; ++k) {
        CAPTURE(k);
        CHECK(std::abs(pv.xi[static_cast<size_t>(k)] -
                       kXi05[static_cast<size_t>(k)]) <= 1e-6 * scale);
    }
}

TEST_CASE("the period vector satisfies the quadric and positivity") {
    for (const ModuliPoint m : {ModuliPoint{0.5, 0.5}, ModuliPoint{0.9, 2.0}}) {
        CAPTURE(m.x);
        const walls::WallSet ws = walls::walls(m);
        const PeriodVector pv = periodmap::periods_fiberwise(m, ws);
        CHECK(periodmap::quadric_residual(pv) <= 1e-9);
        CHECK(periodmap::positivity(pv) > 0.0);
    }
}

TEST_CASE("arc periods satisfy the lattice relation L1 = L5 - L4") {
    const ModuliPoint m{0.5, 0.5};
    const walls::WallSet ws = walls::walls(m);
    const auto G = periodmap::arc_periods(m, ws);
    double scale = 0.0;
    for (const cplx& g : G) scale = std::max(scale, std::abs(g));
    CHECK(std::abs(G[0] - (G[4] - G[3])) <= 1e-8 * scale);
}

TEST_CASE("half-plane coordinates match independently computed values") {
    const ModuliPoint m{0.5, 0.5};
    const walls::WallSet ws = walls::walls(m);
    const PeriodVector pv = periodmap::periods_fiberwise(m, ws);
    const periodmap::HilbertPoint z =
        periodmap::normalize_component(periodmap::to_hilbert(pv));
    CHECK(z.z1.imag() == doctest::Approx(1.5294760928704).epsilon(1e-8));
    CHECK(z.z2.imag() == doctest::Approx(1.02336875496333).epsilon(1e-8));
    CHECK(std::abs(z.z1.real()) <= 1e-8);
    CHECK(std::abs(z.z2.real()) <= 1e-8);
    CHECK(z.z1.imag() > 0.0);
    CHECK(z.z2.imag() > 0.0);
    CHECK(periodmap::product_identity_residual(z, pv) <= 1e-7);
}

TEST_CASE("degenerate and ambiguous cases are reported") {
    PeriodVector pv;
    pv.xi = {cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0}, cplx{1.0, 0.0}};
    CHECK_THROWS_AS((void)periodmap::to_hilbert(pv), DegeneratePeriodsError);

    periodmap::HilbertPoint up{cplx{0.1, 2.0}, cplx{-0.3, 1.0}};
    const periodmap::HilbertPoint u = periodmap::normalize_component(up);
    CHECK(u.z1 == up.z1);
    CHECK(u.z2 == up.z2);

    periodmap::HilbertPoint down{cplx{0.1, -2.0}, cplx{-0.3, -1.0}};
    const periodmap::HilbertPoint d = periodmap::normalize_component(down);
    CHECK(d.z1 == std::conj(down.z1));
    CHECK(d.z2 == std::conj(down.z2));

    periodmap::HilbertPoint mixed{cplx{0.1, 2.0}, cplx{-0.3, -1.0}};
    CHECK_THROWS_AS((void)periodmap::normalize_component(mixed),
                    ComponentAmbiguousError);
}

} // TEST_SUITE
