#pragma once

#include <functional>
#include <vector>

#include "gasp/domain.hpp"
#include "gasp/hyperfun.hpp"
#include "gasp/kernel.hpp"
#include "gasp/solver.hpp"

// Independent references used to check the engines: finite differences of the
// operator, a finite-difference Dirichlet solver and naive series sums.

namespace gasp {

using Field = std::function<double(const Point&)>;

// Central-difference value of sum u_{x_i x_i} + sum_{k<n} (2 alpha_k / x_k) u_{x_k}.
double pde_residual(const Field& u, const EllipticParams& ep, const Point& x, double h);

struct FdGrid {
    double h = 0.0;
    std::vector<double> lower;  // coordinate of index 0 on each axis
    std::vector<int> count;     // nodes per axis
    std::vector<double> values;
    // 0 outside, 1 interior unknown, 2 face (Dirichlet)
    std::vector<unsigned char> kind;
    int iterations = 0;
    double residual = 0.0;

    std::size_t index(const std::vector<int>& ijk) const;
    // Multilinear interpolation; every corner of the cell must be interior or face.
    double interpolate(const Point& x) const;
};

FdGrid fd_solve(const EllipticParams& ep, const HalfBallDomain& dom, const BoundaryData& data, double h,
                int max_sweeps = 200000);

// Naive sum of every multi-index of total degree <= degree_cap.
double series_reference_fa(const LauricellaParams& p, const std::vector<double>& z, int degree_cap);

// ln Gamma(x), x > 0, from the Stirling series after shifting x above 15.
double reference_log_gamma(double x);

// 2F1(a,b;c;x) for x < 1 from Euler's integral; requires c > b > 0.
double gauss_integral_reference(double a, double b, double c, double x);

// x_k^{2 alpha_k} dG/dx_k at x_k = eps and 2 eps, Richardson-combined.
double boundary_kernel_limit(const EllipticParams& ep, int k, const Point& x_face, const Point& xi, double R,
                             const SeriesControl& ctl = {}, double eps = 1e-4);

}  // namespace gasp
