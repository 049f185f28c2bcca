#include "doctest.h"

#include <cmath>

#include "hp/parallel.hpp"
#include "hp/quad.hpp"
#include "hp/types.hpp"

using hp::cplx;
using namespace hp::quad;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_SUITE("quad") {

TEST_CASE("smooth integrand converges to machine precision") {
    const auto f = [](double x) { return cplx{std::exp(-x * x), 0.0}; };
    const QuadResult r = integrate_de(f, 0.0, 1.0, {});
    REQUIRE(r.converged);
    CHECK(r.value.real() == doctest::Approx(0.74682413281242702).epsilon(1e-14));
}

TEST_CASE("offset-aware rule resolves endpoint square roots to 1e-12") {
    // int_0^1 dx / sqrt(x (1-x)) = pi
    const auto f = [](double, double da, double db) {
        return cplx{1.0 / std::sqrt(da * db), 0.0};
    };
    const QuadResult r = integrate_de_w(f, 0.0, 1.0, {});
    REQUIRE(r.converged);
    CHECK(std::abs(r.value.real() - kPi) <= 1e-12 * kPi);
}

TEST_CASE("logarithmic endpoint singularity") {
    const auto f = [](double x) { return cplx{std::log(x), 0.0}; };
    const QuadResult r = integrate_de(f, 0.0, 1.0, {});
    REQUIRE(r.converged);
    CHECK(r.value.real() == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("strong algebraic singularity x^{-0.9}") {
    const auto f = [](double, double da, double) {
        return cplx{std::pow(da, -0.9), 0.0};
    };
    const QuadResult r = integrate_de_w(f, 0.0, 1.0, {});
    REQUIRE(r.converged);
    CHECK(std::abs(r.value.real() - 10.0) <= 1e-12 * 10.0);
}

TEST_CASE("semi-infinite rules") {
    SUBCASE("exponential decay") {
        const auto f = [](double x) { return cplx{std::exp(-x), 0.0}; };
        const QuadResult r = integrate_semi_inf(f, 0.0, {});
        REQUIRE(r.converged);
        CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("gamma(1/2) with endpoint singularity") {
        const auto f = [](double, double da) {
            return cplx{std::exp(-da) / std::sqrt(da), 0.0};
        };
        const QuadResult r = integrate_semi_inf_w(f, 0.0, {});
        REQUIRE(r.converged);
        CHECK(std::abs(r.value.real() - std::sqrt(kPi)) <=
              1e-12 * std::sqrt(kPi));
    }
    SUBCASE("algebraic decay") {
        const auto f = [](double x) { return cplx{1.0 / (1.0 + x * x), 0.0}; };
        const QuadResult r = integrate_semi_inf(f, 0.0, {});
        REQUIRE(r.converged);
        CHECK(r.value.real() == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    }
    SUBCASE("downward half line") {
        const auto f = [](double x) { return cplx{std::exp(x), 0.0}; };
        const QuadResult r = integrate_semi_inf_down(f, 0.0, {});
        REQUIRE(r.converged);
        CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("shifted lower endpoint") {
        const auto f = [](double x) { return cplx{std::exp(-(x - 3.0)), 0.0}; };
        const QuadResult r = integrate_semi_inf(f, 3.0, {});
        REQUIRE(r.converged);
        CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("contour rule integrates 1/z around a square to 2 pi i") {
    const auto f = [](cplx z) { return 1.0 / z; };
    const std::vector<cplx> sq{{1.0, 1.0},  {-1.0, 1.0},  {-1.0, -1.0},
                               {1.0, -1.0}, {1.0, 1.0}};
    const QuadResult r = integrate_contour(f, sq, {});
    REQUIRE(r.converged);
    CHECK(std::abs(r.value - cplx{0.0, 2.0 * kPi}) <= 1e-11);
}

TEST_CASE("contour rule flags a branch jump") {
    const auto f = [](cplx z) { return std::sqrt(z); };
    // The principal square root jumps across the negative real axis.
    const std::vector<cplx> seg{{-1.0, 0.4}, {-1.0, -0.4}};
    CHECK_THROWS_AS((void)integrate_contour(f, seg, {}), hp::BranchJumpError);
}

TEST_CASE("unreachable tolerance reports no convergence") {
    QuadSpec s;
    s.rel_tol = 1e-30;
    s.abs_tol = 1e-30;
    s.max_level = 3;
    const auto f = [](double x) { return cplx{1.0 / (1.0 + x), 0.0}; };
    const QuadResult r = integrate_de(f, 0.0, 1.0, s);
    CHECK(!r.converged);
    CHECK_THROWS_AS((void)require_converged(r, "probe"), hp::NoConvergenceError);
}

TEST_CASE("parallel node evaluation is byte-identical to serial") {
    const auto f = [](double u, double da, double db) {
        return cplx{std::cos(3.0 * u) / std::sqrt(da * db), 0.0};
    };
    hp::par::set_threads(1);
    const QuadResult serial = integrate_de_parallel_w(f, 0.0, 2.0, {});
    hp::par::set_threads(4);
    const QuadResult wide = integrate_de_parallel_w(f, 0.0, 2.0, {});
    hp::par::set_threads(0); // back to the environment default
    REQUIRE(serial.converged);
    REQUIRE(wide.converged);
    CHECK(serial.value.real() == wide.value.real());
    CHECK(serial.value.imag() == wide.value.imag());
    // And the plain serial variant agrees bitwise as well.
    const QuadResult plain = integrate_de_w(f, 0.0, 2.0, {});
    CHECK(plain.value.real() == serial.value.real());
}

} // TEST_SUITE
