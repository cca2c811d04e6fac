#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>

#include "gasp/errors.hpp"
#include "gasp/oracle.hpp"

namespace gasp {

double pde_residual(const Field& u, const EllipticParams& ep, const Point& x, double h) {
    if (int(x.size()) != ep.m()) throw DomainError("pde_residual: dimension mismatch");
    if (!(h > 0.0)) throw DomainError("pde_residual: step must be positive");
    for (int k = 0; k < ep.n(); ++k)
        if (!(x[k] > h)) throw DomainError("pde_residual: point too close to a singular plane");
    const double u0 = u(x);
    double s = 0.0;
    for (int i = 0; i < ep.m(); ++i) {
        Point xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        const double up = u(xp), um = u(xm);
        s += (up - 2.0 * u0 + um) / (h * h);
        if (i < ep.n()) s += 2.0 * ep.alpha(i) / x[i] * (up - um) / (2.0 * h);
    }
    return s;
}

double series_reference_fa(const LauricellaParams& p, const std::vector<double>& z, int degree_cap) {
    p.validate();
    const std::size_t n = p.n();
    if (z.size() != n) throw DomainError("series_reference_fa: argument count differs from n");
    double zs = 0.0;
    for (double v : z) zs += std::fabs(v);
    if (!(zs < 1.0)) throw DomainError("series_reference_fa: requires sum |z_k| < 1");

    std::vector<int> idx(n, 0);
    double total = 0.0;
    for (;;) {
        int deg = 0;
        for (int v : idx) deg += v;
        if (deg <= degree_cap) {
            double t = 1.0;
            for (int i = 0; i < deg; ++i) t *= p.a + i;
            for (std::size_t k = 0; k < n; ++k) {
                for (int i = 0; i < idx[k]; ++i) t *= (p.b[k] + i) / (p.c[k] + i) * z[k] / (i + 1);
            }
            total += t;
        }
        // odometer over the box [0, degree_cap]^n, skipping rows past the cap
        std::size_t k = 0;
        for (; k < n; ++k) {
            if (deg < degree_cap) {
                ++idx[k];
                break;
            }
            deg -= idx[k];
            idx[k] = 0;
        }
        if (k == n) break;
    }
    return total;
}

double reference_log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("reference_log_gamma: argument must be positive");
    double shift = 0.0;
    while (x < 15.0) {
        shift += std::log(x);
        x += 1.0;
    }
    const double y2 = 1.0 / (x * x);
    // Bernoulli terms B_{2k} / (2k (2k-1) x^{2k-1})
    const double series =
        (1.0 / 12 + y2 * (-1.0 / 360 + y2 * (1.0 / 1260 + y2 * (-1.0 / 1680 +
            y2 * (1.0 / 1188 + y2 * (-691.0 / 360360 + y2 * (1.0 / 156))))))) / x;
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * M_PI) + series - shift;
}

double gauss_integral_reference(double a, double b, double c, double x) {
    if (!(c > b && b > 0.0)) throw DomainError("gauss_integral_reference: requires c > b > 0");
    if (!(x < 1.0)) throw DomainError("gauss_integral_reference: requires x < 1");
    boost::math::quadrature::tanh_sinh<double> ts;
    // split at 1/2 so that both endpoint singularities sit at 0 of their own variable
    auto left = [&](double t) {
        return std::pow(t, b - 1) * std::pow(1 - t, c - b - 1) * std::pow(1 - x * t, -a);
    };
    auto right = [&](double s) {
        return std::pow(s, c - b - 1) * std::pow(1 - s, b - 1) * std::pow(1 - x + x * s, -a);
    };
    const double I = ts.integrate(left, 0.0, 0.5, 1e-15) + ts.integrate(right, 0.0, 0.5, 1e-15);
    return std::exp(reference_log_gamma(c) - reference_log_gamma(b) - reference_log_gamma(c - b)) * I;
}

double boundary_kernel_limit(const EllipticParams& ep, int k, const Point& x_face, const Point& xi, double R,
                             const SeriesControl& ctl, double eps) {
    if (k < 0 || k >= ep.n()) throw DomainError("boundary_kernel_limit: axis out of range");
    auto at = [&](double e) {
        Point x = x_face;
        x[k] = e;
        const Reflection rf = reflect(ep, xi, R);
        const double d0 = fundamental_gradient(ep, x, xi, ctl)[k];
        const double d1 = fundamental_gradient(ep, x, rf.xi_bar, ctl)[k];
        return std::pow(e, 2.0 * ep.alpha(k)) * (d0 - rf.scale * d1);
    };
    return (4.0 * at(eps) - at(2.0 * eps)) / 3.0;
}

}  // namespace gasp
