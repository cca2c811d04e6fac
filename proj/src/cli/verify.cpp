#include <algorithm>
#include <cmath>
#include <random>

#include "gasp/cli.hpp"
#include "gasp/errors.hpp"
#include "gasp/oracle.hpp"

namespace gasp::cli {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& g, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

struct Collector {
    std::vector<PropertyResult>& out;
    std::string suite;
    // measured <= tolerance passes; an exception counts as a failure
    template <class F>
    void check(const std::string& name, double tol, F&& f) {
        double v;
        try {
            v = f();
        } catch (const std::exception&) {
            v = INFINITY;
        }
        out.push_back({suite, name, v <= tol, v, tol});
    }
};

void hyperfun_suite(std::vector<PropertyResult>& out, Rng& g) {
    Collector c{out, "hyperfun"};
    c.check("gauss_at_zero_is_one", 0.0, [] { return std::fabs(gauss_2f1({0.7, 1.3, 2.1, 0.0}).value - 1.0); });
    c.check("gauss_summation_near_one", 1e-4, [&] {
        double worst = 0.0;
        SeriesControl ctl{1e-7, 200, 200000000};
        for (int i = 0; i < 5; ++i) {
            const double a = uniform(g, 0.2, 2), b = uniform(g, 0.2, 2), c = a + b + uniform(g, 1.5, 3);
            const double s = gauss_2f1({a, b, c, 1 - 1e-8}, ctl).value, cf = gauss_2f1({a, b, c, 1.0}).value;
            worst = std::max(worst, rel(s, cf));
        }
        return worst;
    });
    c.check("gamma_vs_stirling", 1e-12, [&] {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double x = uniform(g, 0.1, 30);
            worst = std::max(worst, std::fabs(log_gamma(x) - reference_log_gamma(x)) /
                                        std::max(1.0, std::fabs(reference_log_gamma(x))));
        }
        return worst;
    });
    c.check("pfaff_vs_euler_integral", 1e-9, [&] {
        double worst = 0.0;
        for (double x : {-0.5, -2.0, -10.0})
            for (int i = 0; i < 3; ++i) {
                const double a = uniform(g, 0.2, 2), b = uniform(g, 0.3, 2), c = b + uniform(g, 0.3, 2);
                worst = std::max(worst, rel(gauss_2f1({a, b, c, x}).value, gauss_integral_reference(a, b, c, x)));
            }
        return worst;
    });
    c.check("decomposed_vs_naive_series", 1e-8, [&] {
        double worst = 0.0;
        for (int n : {2, 3}) {
            LauricellaParams p{uniform(g, 0.2, 2), {}, {}};
            std::vector<double> z;
            for (int k = 0; k < n; ++k) {
                p.b.push_back(uniform(g, 0.2, 2));
                p.c.push_back(uniform(g, 0.5, 2.5));
                z.push_back(uniform(g, -0.5, 0.5) / n);
            }
            worst = std::max(worst, rel(lauricella_fa_decomposed(p, z).value, series_reference_fa(p, z, 60)));
        }
        return worst;
    });
    c.check("index_parity", 0.0, [] {
        // sum_k M(k,n) is twice the sum of the table entries
        int bad = 0;
        for (int n = 2; n <= 4; ++n) {
            IndexAssignment t(n);
            const std::size_t T = t.size();
            std::vector<int> idx(T, 0);
            for (;;) {
                t.values() = idx;
                long sm = 0;
                for (int k = 1; k <= n; ++k) sm += index_maps(t, k, n).first;
                if (sm != 2L * t.degree()) ++bad;
                std::size_t e = 0;
                while (e < T && idx[e] == 3) idx[e++] = 0;
                if (e == T) break;
                ++idx[e];
            }
        }
        return double(bad);
    });
    c.check("adjacent_relation", 1e-8, [] {
        return std::fabs(adjacent_relation_residual({1.1, {0.75, 0.6}, {1.5, 1.2}}, {-0.2, -0.15}));
    });
    c.check("aleph_identity_m2_n1", 1e-7, [] {
        const AlephLimit a = aleph_limit(EllipticParams(2, {0.25}));
        return rel(a.series.value, a.closed_form);
    });
    c.check("surface_constants", 1e-12, [] {
        const double pi = M_PI;
        const double known[] = {2 * pi, 4 * pi, 2 * pi * pi, 8 * pi * pi / 3, pi * pi * pi};
        double worst = 0.0;
        for (int m = 2; m <= 6; ++m) worst = std::max(worst, rel(surface_constant(m), known[m - 2]));
        return worst;
    });
}

void kernel_suite(std::vector<PropertyResult>& out, Rng& g) {
    Collector c{out, "kernel"};
    const EllipticParams ep(3, {0.25, 1.0 / 3});
    auto draw = [&] {
        Point x(3);
        x[0] = uniform(g, 0.1, 0.6);
        x[1] = uniform(g, 0.1, 0.6);
        x[2] = uniform(g, -0.5, 0.5);
        return x;
    };
    c.check("symmetry", 1e-10, [&] {
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            const Point x = draw(), xi = draw();
            worst = std::max(worst, rel(fundamental_solution(ep, x, xi), fundamental_solution(ep, xi, x)));
        }
        return worst;
    });
    c.check("gradient_vs_differences", 1e-5, [&] {
        double worst = 0.0;
        for (int i = 0; i < 3; ++i) {
            const Point x = draw(), xi = draw();
            const auto grad = fundamental_gradient(ep, x, xi);
            double scale = 0.0;
            for (double v : grad) scale = std::max(scale, std::fabs(v));
            for (int a = 0; a < 3; ++a) {
                const double h = 1e-4;
                Point p = x, q = x, p2 = x, q2 = x;
                p[a] += h, q[a] -= h, p2[a] += 2 * h, q2[a] -= 2 * h;
                const double fd = (8 * (fundamental_solution(ep, p, xi) - fundamental_solution(ep, q, xi)) -
                                   (fundamental_solution(ep, p2, xi) - fundamental_solution(ep, q2, xi))) /
                                  (12 * h);
                worst = std::max(worst, std::fabs(fd - grad[a]) / scale);
            }
        }
        return worst;
    });
    c.check("green_vanishes_on_sphere", 1e-6, [&] {
        const Point xi{0.3, 0.2, 0.1};
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            Point x{uniform(g, 0.05, 1), uniform(g, 0.05, 1), uniform(g, -1, 1)};
            double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
            for (double& v : x) v /= r;
            worst = std::max(worst, std::fabs(green(ep, x, xi, 1.0)) / fundamental_solution(ep, x, xi));
        }
        return worst;
    });
    c.check("face_kernel_vs_limit", 1e-3, [&] {
        const Point xi{0.3, 0.2, 0.1};
        double worst = 0.0;
        for (int k = 0; k < 2; ++k) {
            Point x{0.2, 0.25, -0.3};
            x[k] = 0.0;
            worst = std::max(worst,
                             rel(boundary_kernel(ep, k, x, xi, 1.0), boundary_kernel_limit(ep, k, x, xi, 1.0)));
        }
        return worst;
    });
}

void domain_suite(std::vector<PropertyResult>& out) {
    Collector c{out, "domain"};
    c.check("sphere_section_area", 1e-12, [] {
        double worst = 0.0;
        for (auto [m, n] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 3}}) {
            const HalfBallDomain dom{1.5, EllipticParams(m, std::vector<double>(n, 0.25))};
            double s = 0.0;
            for (const SurfaceNode& nd : sphere_nodes(dom, 8)) s += nd.weight;
            worst = std::max(worst, rel(s, surface_constant(m) * std::pow(1.5, m - 1) / std::pow(2.0, n)));
        }
        return worst;
    });
    c.check("face_area", 1e-12, [] {
        double worst = 0.0;
        for (auto [m, n] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 3}}) {
            const HalfBallDomain dom{1.5, EllipticParams(m, std::vector<double>(n, 0.25))};
            const int d = m - 1;
            const double ball = std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0 + 1) * std::pow(1.5, d);
            for (int k = 0; k < n; ++k) {
                double s = 0.0;
                for (const SurfaceNode& nd : face_nodes(dom, k, 8)) s += nd.weight;
                worst = std::max(worst, rel(s, ball / std::pow(2.0, n - 1)));
            }
        }
        return worst;
    });
}

void solver_suite(std::vector<PropertyResult>& out, Rng& g) {
    Collector c{out, "solver"};
    const EllipticParams ep(2, {0.25});
    const HalfBallDomain dom{1.0, ep};
    auto one = [](const Point&) { return 1.0; };
    auto f1 = [](const Point& x) { return 1.0 + x[1]; };
    auto f2 = [](const Point& x) { return x[1] * x[1]; };
    const std::vector<Point> probes{{0.3, 0.1}, {0.5, 0.0}, {0.3, -0.4}};
    c.check("constant_reproduction", 1e-3, [&] {
        DirichletProblem p{dom, {{one}, one}, 16, {}};
        double worst = 0.0;
        for (double u : solve_grid(p, probes)) worst = std::max(worst, std::fabs(u - 1.0));
        return worst;
    });
    c.check("linearity", 1e-12, [&] {
        const double a = uniform(g, -2, 2), b = uniform(g, -2, 2);
        auto mix = [&](const Point& x) { return a * f1(x) + b * f2(x); };
        DirichletProblem p1{dom, {{f1}, f1}, 16, {}}, p2{dom, {{f2}, f2}, 16, {}}, p3{dom, {{mix}, mix}, 16, {}};
        const double u1 = solve_at(p1, probes[0]), u2 = solve_at(p2, probes[0]), u3 = solve_at(p3, probes[0]);
        return std::fabs(u3 - (a * u1 + b * u2)) / std::max({std::fabs(u3), std::fabs(a * u1), std::fabs(b * u2)});
    });
    c.check("rim_mismatch_detected", 0.0, [&] {
        auto two = [](const Point&) { return 2.0; };
        DirichletProblem p{dom, {{one}, two}, 16, {}};
        return std::fabs(check_matching(p, 8).rim_max - 1.0);
    });
    c.check("probe_order_independence", 0.0, [&] {
        DirichletProblem p{dom, {{f1}, f1}, 16, {}};
        std::vector<Point> rev(probes.rbegin(), probes.rend());
        const auto u = solve_grid(p, probes), v = solve_grid(p, rev);
        double d = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[u.size() - 1 - i];
        return d;
    });
}

void oracle_suite(std::vector<PropertyResult>& out) {
    Collector c{out, "oracle"};
    const EllipticParams ep(2, {0.25});
    c.check("residual_of_constant", 1e-9, [&] {
        return std::fabs(pde_residual([](const Point&) { return 1.0; }, ep, {0.4, 0.2}, 1e-3));
    });
    c.check("residual_of_power_solution", 1e-5, [&] {
        return std::fabs(pde_residual([](const Point& x) { return std::pow(x[0], 0.5); }, ep, {0.4, 0.2}, 1e-3));
    });
    c.check("naive_series_at_zero", 0.0, [] {
        return std::fabs(series_reference_fa({0.5, {0.3, 0.4}, {1.2, 1.5}}, {0.0, 0.0}, 10) - 1.0);
    });
    c.check("fd_constant_data", 1e-9, [&] {
        auto one = [](const Point&) { return 1.0; };
        const FdGrid gr = fd_solve(ep, {1.0, ep}, {{one}, one}, 0.02);
        double worst = 0.0;
        for (std::size_t i = 0; i < gr.values.size(); ++i)
            if (gr.kind[i]) worst = std::max(worst, std::fabs(gr.values[i] - 1.0));
        return worst;
    });
}

}  // namespace

std::vector<PropertyResult> verify_suites(const std::string& suite, std::uint64_t seed) {
    std::vector<PropertyResult> out;
    Rng g(seed);
    const bool all = suite == "all";
    if (all || suite == "hyperfun") hyperfun_suite(out, g);
    if (all || suite == "kernel") kernel_suite(out, g);
    if (all || suite == "domain") domain_suite(out);
    if (all || suite == "solver") solver_suite(out, g);
    if (all || suite == "oracle") oracle_suite(out);
    return out;
}

}  // namespace gasp::cli
