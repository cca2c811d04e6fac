#include <cmath>
#include <sstream>
#include <string>

#include "gasp/errors.hpp"
#include "gasp/kernel.hpp"

namespace gasp {

namespace {

void check_point(const EllipticParams& ep, const Point& p, const char* what) {
    if (int(p.size()) != ep.m())
        throw DomainError(std::string(what) + ": point dimension differs from m");
}

double norm_sq(const Point& p) {
    double s = 0.0;
    for (double v : p) s += v * v;
    return s;
}

// F_A(alpha_tilde + shift, 1 - alpha; 2 - 2 alpha; z) over the axes listed in
// `axes`, with b_j, c_j raised by one on axis `bump` (or none if bump < 0).
double kernel_fa(const EllipticParams& ep, const std::vector<int>& axes, const std::vector<double>& z,
                 double shift, int bump, const SeriesControl& ctl) {
    if (axes.empty()) return 1.0;
    LauricellaParams p;
    p.a = ep.alpha_tilde() + shift;
    for (int k : axes) {
        p.b.push_back(1.0 - ep.alpha(k));
        p.c.push_back(2.0 - 2.0 * ep.alpha(k));
    }
    if (bump >= 0) {
        p.b[bump] += 1.0;
        p.c[bump] += 1.0;
    }
    const EvalResult r = lauricella_fa_decomposed(p, z, ctl);
    if (!r.converged) {
        std::ostringstream os;
        os.precision(17);
        os << "F_A did not converge within budget at z = (";
        for (std::size_t i = 0; i < z.size(); ++i) os << (i ? ", " : "") << z[i];
        os << "), a = " << p.a << ", terms used " << r.terms_used;
        throw ConvergenceError(os.str());
    }
    return r.value;
}

std::vector<int> all_axes(const EllipticParams& ep) {
    std::vector<int> a(ep.n());
    for (int k = 0; k < ep.n(); ++k) a[k] = k;
    return a;
}

void check_pair(const EllipticParams& ep, const Point& x, const Point& xi, const char* what) {
    check_point(ep, x, what);
    check_point(ep, xi, what);
    for (int k = 0; k < ep.n(); ++k) {
        if (!(xi[k] > 0.0)) throw DomainError(std::string(what) + ": source must have xi_k > 0 on singular axes");
        if (x[k] < 0.0) throw DomainError(std::string(what) + ": x must have x_k >= 0 on singular axes");
    }
}

double guarded_r_sq(const Point& x, const Point& xi, const char* what) {
    double r2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) r2 += (x[i] - xi[i]) * (x[i] - xi[i]);
    if (!(r2 > 1e-24 * (norm_sq(x) + norm_sq(xi)))) throw SingularityError(std::string(what) + ": x coincides with xi");
    return r2;
}

// log of prod_k (x_k xi_k)^{1-2 alpha_k}; -inf when some x_k = 0
double log_product(const EllipticParams& ep, const Point& x, const Point& xi) {
    double s = 0.0;
    for (int k = 0; k < ep.n(); ++k) {
        if (x[k] == 0.0) return -INFINITY;
        s += (1.0 - 2.0 * ep.alpha(k)) * (std::log(x[k]) + std::log(xi[k]));
    }
    return s;
}

}  // namespace

PairGeometry pair_geometry(const EllipticParams& ep, const Point& x, const Point& xi) {
    check_point(ep, x, "pair_geometry");
    check_point(ep, xi, "pair_geometry");
    PairGeometry g;
    g.r_sq = guarded_r_sq(x, xi, "pair_geometry");
    for (int k = 0; k < ep.n(); ++k) {
        g.r_k_sq.push_back(g.r_sq + 4.0 * x[k] * xi[k]);
        g.sigma.push_back(-4.0 * x[k] * xi[k] / g.r_sq);
    }
    return g;
}

double fundamental_solution(const EllipticParams& ep, const Point& x, const Point& xi,
                            const SeriesControl& ctl) {
    check_pair(ep, x, xi, "fundamental_solution");
    const PairGeometry g = pair_geometry(ep, x, xi);
    const double lp = log_product(ep, x, xi);
    if (lp == -INFINITY) return 0.0;
    const double f = kernel_fa(ep, all_axes(ep), g.sigma, 0.0, -1, ctl);
    return ep.gamma_n() * std::exp(lp - ep.alpha_tilde() * std::log(g.r_sq)) * f;
}

std::vector<double> fundamental_gradient(const EllipticParams& ep, const Point& x, const Point& xi,
                                         const SeriesControl& ctl) {
    check_pair(ep, x, xi, "fundamental_gradient");
    for (int k = 0; k < ep.n(); ++k)
        if (!(x[k] > 0.0)) throw DomainError("fundamental_gradient: requires x_k > 0 on singular axes");
    const PairGeometry g = pair_geometry(ep, x, xi);
    const std::vector<int> axes = all_axes(ep);
    const double at = ep.alpha_tilde();
    // base = gamma_n prod (x_i xi_i)^{1-2 alpha_i} r^{-2 at}
    const double base = ep.gamma_n() * std::exp(log_product(ep, x, xi) - at * std::log(g.r_sq));
    const double F0 = kernel_fa(ep, axes, g.sigma, 0.0, -1, ctl);
    const double F1 = kernel_fa(ep, axes, g.sigma, 1.0, -1, ctl);
    std::vector<double> grad(ep.m());
    for (int i = 0; i < ep.m(); ++i) {
        double v = 2.0 * at * (xi[i] - x[i]) * base / g.r_sq * F1;
        if (i < ep.n()) {
            const double Fk = kernel_fa(ep, axes, g.sigma, 1.0, i, ctl);
            v += (1.0 - 2.0 * ep.alpha(i)) / x[i] * base * F0;
            v -= 2.0 * at * xi[i] * base / g.r_sq * Fk;
        }
        grad[i] = v;
    }
    return grad;
}

Reflection reflect(const EllipticParams& ep, const Point& xi, double R) {
    check_point(ep, xi, "reflect");
    if (!(R > 0.0)) throw DomainError("reflect: radius must be positive");
    Reflection r;
    r.R0_sq = norm_sq(xi);
    if (!(r.R0_sq > 0.0)) throw DomainError("reflect: source at the origin");
    const double f = R * R / r.R0_sq;
    r.xi_bar = xi;
    for (double& v : r.xi_bar) v *= f;
    r.scale = std::exp((ep.m() - 2 + 2.0 * ep.alpha_sum()) * 0.5 * std::log(f));
    return r;
}

namespace {

void check_green(const EllipticParams& ep, const Point& x, const Point& xi, double R, const char* what) {
    check_pair(ep, x, xi, what);
    if (!(R > 0.0)) throw DomainError(std::string(what) + ": radius must be positive");
    if (!(norm_sq(xi) < R * R)) throw DomainError(std::string(what) + ": source outside the ball");
    double r2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) r2 += (x[i] - xi[i]) * (x[i] - xi[i]);
    if (r2 < 1e-12 * R * R) throw SingularityError(std::string(what) + ": x too close to xi");
}

}  // namespace

double green(const EllipticParams& ep, const Point& x, const Point& xi, double R, const SeriesControl& ctl) {
    check_green(ep, x, xi, R, "green");
    const Reflection rf = reflect(ep, xi, R);
    return fundamental_solution(ep, x, xi, ctl) - rf.scale * fundamental_solution(ep, x, rf.xi_bar, ctl);
}

double green_normal_derivative(const EllipticParams& ep, const Point& x, const Point& xi, double R,
                               const SeriesControl& ctl) {
    check_green(ep, x, xi, R, "green_normal_derivative");
    const Reflection rf = reflect(ep, xi, R);
    const std::vector<double> g0 = fundamental_gradient(ep, x, xi, ctl);
    const std::vector<double> g1 = fundamental_gradient(ep, x, rf.xi_bar, ctl);
    const double len = std::sqrt(norm_sq(x));
    double s = 0.0;
    for (int i = 0; i < ep.m(); ++i) s += (g0[i] - rf.scale * g1[i]) * x[i] / len;
    return s;
}

BoundaryKernelArgs boundary_kernel_args(const EllipticParams& ep, int k, const Point& x_face,
                                        const Point& xi, double R) {
    check_point(ep, x_face, "boundary_kernel");
    check_point(ep, xi, "boundary_kernel");
    if (k < 0 || k >= ep.n()) throw DomainError("boundary_kernel: axis out of range");
    if (x_face[k] != 0.0) throw DomainError("boundary_kernel: point is not on the face x_k = 0");
    double d0 = 0.0, dot = 0.0;
    for (int i = 0; i < ep.m(); ++i) {
        d0 += (xi[i] - x_face[i]) * (xi[i] - x_face[i]);
        dot += x_face[i] * xi[i];
    }
    const double dbar = R * R - 2.0 * dot + norm_sq(x_face) * norm_sq(xi) / (R * R);
    if (!(d0 > 1e-12 * R * R) || !(dbar > 1e-12 * R * R))
        throw SingularityError("boundary_kernel: degenerate denominator");
    BoundaryKernelArgs a;
    for (int s = 0; s < ep.n(); ++s) {
        if (s == k) continue;
        a.sigma0.push_back(-4.0 * x_face[s] * xi[s] / d0);
        a.sigma0_bar.push_back(-4.0 * x_face[s] * xi[s] / dbar);
    }
    return a;
}

double boundary_kernel(const EllipticParams& ep, int k, const Point& x_face, const Point& xi, double R,
                       const SeriesControl& ctl) {
    check_pair(ep, x_face, Point(xi), "boundary_kernel");
    const BoundaryKernelArgs args = boundary_kernel_args(ep, k, x_face, xi, R);
    if (!(norm_sq(xi) < R * R)) throw DomainError("boundary_kernel: source outside the ball");
    std::vector<int> axes;
    double lp = (1.0 - 2.0 * ep.alpha(k)) * std::log(xi[k]);
    for (int s = 0; s < ep.n(); ++s) {
        if (s == k) continue;
        axes.push_back(s);
        if (x_face[s] == 0.0) return 0.0;
        lp += (1.0 - 2.0 * ep.alpha(s)) * (std::log(x_face[s]) + std::log(xi[s]));
    }
    double d0 = 0.0, dot = 0.0;
    for (int i = 0; i < ep.m(); ++i) {
        d0 += (xi[i] - x_face[i]) * (xi[i] - x_face[i]);
        dot += x_face[i] * xi[i];
    }
    const double dbar = R * R - 2.0 * dot + norm_sq(x_face) * norm_sq(xi) / (R * R);
    const double at = ep.alpha_tilde();
    const double direct = kernel_fa(ep, axes, args.sigma0, 0.0, -1, ctl) * std::exp(-at * std::log(d0));
    const double image = kernel_fa(ep, axes, args.sigma0_bar, 0.0, -1, ctl) * std::exp(-at * std::log(dbar));
    return (1.0 - 2.0 * ep.alpha(k)) * ep.gamma_n() * std::exp(lp) * (direct - image);
}

}  // namespace gasp
