#pragma once

#include <vector>

#include "gasp/kernel.hpp"
#include "gasp/params.hpp"

namespace gasp {

// { |x| < R, x_1 > 0, ..., x_n > 0 }
struct HalfBallDomain {
    double R;
    EllipticParams ep;
};

struct SurfaceNode {
    Point point;
    double weight;
    std::vector<double> normal;
};

struct QuadratureRule {
    std::vector<double> x;
    std::vector<double> w;
};

// n-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

// Hyperspherical chart of the section of the unit sphere in R^d with the first
// p coordinates positive: unit vectors and weights (angular Jacobian times the
// tensor Gauss-Legendre weights, `level` nodes per angle and 2*level on a full
// circle).
struct AngularRule {
    std::vector<std::vector<double>> dirs;
    std::vector<double> w;
};
AngularRule cap_rule(int d, int p, int level);

// The chart x_1 = c_1 + rho cos phi_1, x_2 = c_2 + rho sin phi_1 cos phi_2, ...
Point chart_point(const std::vector<double>& angles, double rho, const Point& center);

std::vector<SurfaceNode> sphere_nodes(const HalfBallDomain& dom, int level);
std::vector<SurfaceNode> face_nodes(const HalfBallDomain& dom, int k, int level);
bool contains(const HalfBallDomain& dom, const Point& x);

}  // namespace gasp
