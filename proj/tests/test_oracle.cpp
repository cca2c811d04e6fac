#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gasp/errors.hpp"
#include "gasp/oracle.hpp"

using namespace gasp;

TEST_CASE("pde_residual") {
    const EllipticParams ep(2, {0.3});
    CHECK(pde_residual([](const Point&) { return 4.0; }, ep, {0.5, 0.2}, 1e-3) == 0.0);
    CHECK(std::fabs(pde_residual([](const Point& x) { return std::pow(x[0], 0.4); }, ep, {0.5, 0.2}, 1e-3)) < 1e-5);
    CHECK_THROWS_AS(pde_residual([](const Point&) { return 0.0; }, ep, {1e-4, 0.2}, 1e-3), DomainError);
    const Point xi{0.3, 0.1};
    const Field q = [&](const Point& x) { return fundamental_solution(ep, x, xi, {1e-15, 5000, 2000000}); };
    const double r1 = std::fabs(pde_residual(q, ep, {0.6, 0.4}, 0.02));
    const double r2 = std::fabs(pde_residual(q, ep, {0.6, 0.4}, 0.01));
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("series_reference_fa") {
    const LauricellaParams p{0.6, {0.5, 1.2}, {1.1, 2.0}};
    CHECK(series_reference_fa(p, {0.0, 0.0}, 30) == 1.0);
    const double a = series_reference_fa(p, {0.1, -0.15}, 50), b = series_reference_fa(p, {0.1, -0.15}, 55);
    CHECK(std::fabs(a - b) < 1e-12);
    CHECK(std::fabs(a - lauricella_fa_direct(p, {0.1, -0.15}).value) < 1e-10);
    CHECK_THROWS_AS(series_reference_fa(p, {0.6, 0.5}, 10), DomainError);
}

TEST_CASE("reference gamma and Euler integral") {
    CHECK(std::fabs(reference_log_gamma(0.5) - 0.5 * std::log(M_PI)) < 1e-14);
    CHECK(std::fabs(reference_log_gamma(7.0) - std::log(720.0)) < 1e-13);
    CHECK(std::fabs(gauss_integral_reference(1, 1, 2, 0.5) - 2 * std::log(2.0)) < 1e-13);
}

TEST_CASE("fd_solve") {
    const EllipticParams ep(2, {0.25});
    const HalfBallDomain dom{1.0, ep};
    auto one = [](const Point&) { return 1.0; };
    const FdGrid g = fd_solve(ep, dom, {{one}, one}, 0.025);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.values.size(); ++i)
        if (g.kind[i]) worst = std::max(worst, std::fabs(g.values[i] - 1.0));
    CHECK(worst < 1e-9);
    CHECK_THROWS_AS(fd_solve(ep, dom, {{one}, one}, 0.2), DomainError);
    CHECK_THROWS_AS(fd_solve(EllipticParams(4, {0.2}), {1.0, EllipticParams(4, {0.2})}, {{one}, one}, 0.02),
                    DomainError);
}

TEST_CASE("fd_solve maximum principle and manufactured solution") {
    const EllipticParams ep(3, {0.25});
    const HalfBallDomain dom{1.0, ep};
    const Point pole{0.6, 1.0, 0.9};
    auto q = [&](const Point& x) { return fundamental_solution(ep, x, pole); };
    auto zero = [](const Point&) { return 0.0; };
    const FdGrid g = fd_solve(ep, dom, {{zero}, q}, 0.025);
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < g.values.size(); ++i)
        if (g.kind[i]) hi = std::max(hi, g.values[i]);
    for (const Point& x : {Point{0.4, 0.2, 0.1}, Point{0.3, -0.3, 0.2}}) {
        const double v = g.interpolate(x);
        CHECK(v >= lo);
        CHECK(v <= hi);
        CHECK(std::fabs(v - q(x)) < 1e-3 * q(x));
    }
}

TEST_CASE("fd_solve converges at second order for a manufactured solution") {
    const EllipticParams ep(2, {0.25});
    const Point pole{0.6, 1.4};
    auto q = [&](const Point& x) { return fundamental_solution(ep, x, pole); };
    auto zero = [](const Point&) { return 0.0; };
    const Point x{0.4, 0.2};
    const double e1 = std::fabs(fd_solve(ep, {1.0, ep}, {{zero}, q}, 0.04).interpolate(x) - q(x));
    const double e2 = std::fabs(fd_solve(ep, {1.0, ep}, {{zero}, q}, 0.02).interpolate(x) - q(x));
    CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.1));
}
