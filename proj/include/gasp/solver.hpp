#pragma once

#include <functional>
#include <vector>

#include "gasp/domain.hpp"
#include "gasp/hyperfun.hpp"
#include "gasp/kernel.hpp"

namespace gasp {

using BoundaryFunction = std::function<double(const Point&)>;

// tau[k] lives on the face x_k = 0, phi on the spherical part |x| = R.
struct BoundaryData {
    std::vector<BoundaryFunction> tau;
    BoundaryFunction phi;
};

struct DirichletProblem {
    HalfBallDomain dom;
    BoundaryData data;
    int level;
    SeriesControl ctl;
};

// 16 for m = 2, 12 for m = 3, 8 above.
int default_level(int m);

double solve_at(const DirichletProblem& p, const Point& xi);
std::vector<double> solve_grid(const DirichletProblem& p, const std::vector<Point>& probes);

struct MatchingReport {
    double corner_max = 0.0;  // max |tau_i - tau_j| where all singular coordinates vanish
    double rim_max = 0.0;     // max |tau_k - phi| on the rims x_k = 0, |x| = R
    int corner_samples = 0;
    int rim_samples = 0;
};
MatchingReport check_matching(const DirichletProblem& p, int samples);

// Distance from xi to the boundary and the node spacing there; solve_at refuses
// probes with distance < 2 * spacing.
struct Clearance {
    double distance;
    double spacing;
};
Clearance probe_clearance(const DirichletProblem& p, const Point& xi);

}  // namespace gasp
