#pragma once

#include <vector>

#include "gasp/hyperfun.hpp"
#include "gasp/params.hpp"

// Fundamental solution, Green's function of the half-ball and the face kernels.
// Points are plain coordinate vectors of length m; the singular axes are the
// first n coordinates. Axis arguments are 0-based.

namespace gasp {

using Point = std::vector<double>;

struct PairGeometry {
    double r_sq = 0.0;
    std::vector<double> r_k_sq;
    std::vector<double> sigma;
};

struct Reflection {
    double R0_sq = 0.0;
    Point xi_bar;
    double scale = 1.0;
};

struct BoundaryKernelArgs {
    std::vector<double> sigma0;
    std::vector<double> sigma0_bar;
};

PairGeometry pair_geometry(const EllipticParams& ep, const Point& x, const Point& xi);

double fundamental_solution(const EllipticParams& ep, const Point& x, const Point& xi,
                            const SeriesControl& ctl = {});
std::vector<double> fundamental_gradient(const EllipticParams& ep, const Point& x, const Point& xi,
                                         const SeriesControl& ctl = {});

// xi_bar = (R^2/R0^2) xi and the factor (R/R0)^{m-2+2 sum alpha} that makes the
// reflected pole cancel q_n on |x| = R.
Reflection reflect(const EllipticParams& ep, const Point& xi, double R);

double green(const EllipticParams& ep, const Point& x, const Point& xi, double R,
             const SeriesControl& ctl = {});
// Derivative along the outward normal x/R of the sphere.
double green_normal_derivative(const EllipticParams& ep, const Point& x, const Point& xi, double R,
                               const SeriesControl& ctl = {});

BoundaryKernelArgs boundary_kernel_args(const EllipticParams& ep, int k, const Point& x_face,
                                        const Point& xi, double R);
// lim_{x_k -> 0} x_k^{2 alpha_k} dG/dx_k at a point of the face x_k = 0.
double boundary_kernel(const EllipticParams& ep, int k, const Point& x_face, const Point& xi, double R,
                       const SeriesControl& ctl = {});

}  // namespace gasp
