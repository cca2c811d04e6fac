#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gasp/errors.hpp"
#include "gasp/oracle.hpp"
#include "gasp/solver.hpp"

using namespace gasp;

namespace {
const BoundaryFunction one = [](const Point&) { return 1.0; };
}  // namespace

TEST_CASE("constant data is reproduced") {
    const EllipticParams ep(3, {0.25});
    DirichletProblem p{{1.0, ep}, {{one}, one}, default_level(3), {}};
    CHECK(std::fabs(solve_at(p, {0.4, 0.1, 0.1}) - 1.0) < 1e-3);
}

TEST_CASE("exterior pole solution is reproduced") {
    const EllipticParams ep(2, {0.3});
    const Point pole{0.6, 1.4};
    BoundaryData bd{{[](const Point&) { return 0.0; }}, [&](const Point& x) { return fundamental_solution(ep, x, pole); }};
    DirichletProblem p{{1.0, ep}, bd, 16, {}};
    for (const Point& xi : {Point{0.3, 0.1}, Point{0.4, -0.3}}) {
        const double exact = fundamental_solution(ep, xi, pole);
        CHECK(std::fabs(solve_at(p, xi) - exact) < 1e-3 * exact);
    }
}

TEST_CASE("probe preconditions") {
    const EllipticParams ep(2, {0.25});
    DirichletProblem p{{1.0, ep}, {{one}, one}, 16, {}};
    CHECK_THROWS_AS(solve_at(p, {0.95, 0.0}), DomainError);
    CHECK_THROWS_AS(solve_at(p, {-0.1, 0.0}), DomainError);
    CHECK_THROWS_AS(solve_at(p, {0.02, 0.0}), DomainError);
    const Clearance c = probe_clearance(p, {0.3, 0.1});
    CHECK(c.distance >= 2 * c.spacing);
}

TEST_CASE("solve_grid") {
    const EllipticParams ep(2, {0.25});
    auto f = [](const Point& x) { return 1.0 + x[1] - x[1] * x[1]; };
    DirichletProblem p{{1.0, ep}, {{f}, f}, 16, {}};
    CHECK(solve_grid(p, {}).empty());
    const std::vector<Point> probes{{0.3, 0.1}, {0.5, 0.0}, {0.3, -0.4}};
    const auto u = solve_grid(p, probes);
    CHECK(u[0] == solve_at(p, probes[0]));
    const auto v = solve_grid(p, {probes[2], probes[0], probes[1]});
    CHECK(v[0] == u[2]);
    CHECK(v[1] == u[0]);
    CHECK(v[2] == u[1]);
    try {
        solve_grid(p, {probes[0], {0.99, 0.0}});
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("probe 1") != std::string::npos);
    }
}

TEST_CASE("linearity in the data") {
    const EllipticParams ep(3, {0.25, 1.0 / 3});
    auto f1 = [](const Point& x) { return 1.0 + x[2]; };
    auto f2 = [](const Point& x) { return x[2] * x[2]; };
    auto mix = [&](const Point& x) { return 2.5 * f1(x) - 0.75 * f2(x); };
    const Point xi{0.35, 0.35, 0.1};
    const double u1 = solve_at({{1.0, ep}, {{f1, f1}, f1}, 12, {}}, xi);
    const double u2 = solve_at({{1.0, ep}, {{f2, f2}, f2}, 12, {}}, xi);
    const double u3 = solve_at({{1.0, ep}, {{mix, mix}, mix}, 12, {}}, xi);
    CHECK(std::fabs(u3 - (2.5 * u1 - 0.75 * u2)) <= 1e-12 * std::fabs(u3));
}

TEST_CASE("quadrature refinement reduces the change") {
    const EllipticParams ep(2, {0.25});
    auto f = [](const Point& x) { return std::exp(x[1]); };
    const Point xi{0.3, 0.1};
    double prev = solve_at({{1.0, ep}, {{f}, f}, 16, {}}, xi), last_diff = INFINITY;
    for (int level : {20, 24}) {
        const double u = solve_at({{1.0, ep}, {{f}, f}, level, {}}, xi);
        const double diff = std::fabs(u - prev);
        CHECK(diff <= last_diff);
        last_diff = diff;
        prev = u;
    }
}

TEST_CASE("check_matching") {
    const EllipticParams ep(3, {0.25, 0.3});
    DirichletProblem ok{{1.0, ep}, {{one, one}, one}, 8, {}};
    const MatchingReport a = check_matching(ok, 6);
    CHECK(a.corner_max == 0.0);
    CHECK(a.rim_max == 0.0);
    CHECK(a.corner_samples > 0);
    CHECK(a.rim_samples > 0);
    auto two = [](const Point&) { return 2.0; };
    DirichletProblem bad{{1.0, ep}, {{one, one}, two}, 8, {}};
    CHECK(check_matching(bad, 6).rim_max == 1.0);
    auto g = [](const Point& x) { return std::sin(x[0]) + x[1] * x[2]; };
    DirichletProblem same{{1.0, ep}, {{g, g}, g}, 8, {}};
    const MatchingReport s = check_matching(same, 6);
    CHECK(s.rim_max <= 1e-12);
    CHECK(s.corner_max <= 1e-12);
}
