#include <cmath>
#include <string>

#include "gasp/domain.hpp"
#include "gasp/errors.hpp"

namespace gasp {

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw DomainError("gauss_legendre: need at least one node");
    QuadratureRule r;
    r.x.resize(n);
    r.w.resize(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::fabs(dz) < 1e-16) break;
        }
        // recompute the derivative at the converged root
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        r.x[i] = mid - half * z;
        r.x[n - 1 - i] = mid + half * z;
        r.w[i] = r.w[n - 1 - i] = half * w;
    }
    return r;
}

Point chart_point(const std::vector<double>& angles, double rho, const Point& center) {
    const std::size_t d = angles.size() + 1;
    if (center.size() != d) throw DomainError("chart_point: center dimension mismatch");
    Point x(center);
    double s = rho;
    for (std::size_t j = 0; j + 1 < d; ++j) {
        x[j] += s * std::cos(angles[j]);
        s *= std::sin(angles[j]);
    }
    x[d - 1] += s;
    return x;
}

AngularRule cap_rule(int d, int p, int level) {
    if (d < 1 || level < 1) throw DomainError("cap_rule: bad dimension or level");
    AngularRule out;
    if (d == 1) {
        out.dirs.push_back({1.0});
        out.w.push_back(1.0);
        if (p < 1) {
            out.dirs.push_back({-1.0});
            out.w.push_back(1.0);
        }
        return out;
    }
    std::vector<QuadratureRule> rules;
    for (int j = 1; j <= d - 2; ++j)
        rules.push_back(gauss_legendre(level, 0.0, j <= p ? M_PI / 2 : M_PI));
    if (p >= d)
        rules.push_back(gauss_legendre(level, 0.0, M_PI / 2));
    else if (p == d - 1)
        rules.push_back(gauss_legendre(level, -M_PI / 2, M_PI / 2));
    else
        rules.push_back(gauss_legendre(2 * level, 0.0, 2 * M_PI));

    std::vector<std::size_t> idx(rules.size(), 0);
    const Point origin(d, 0.0);
    for (;;) {
        std::vector<double> ang(rules.size());
        double w = 1.0;
        for (std::size_t j = 0; j < rules.size(); ++j) {
            ang[j] = rules[j].x[idx[j]];
            w *= rules[j].w[idx[j]];
            if (j + 2 <= std::size_t(d - 1)) w *= std::pow(std::sin(ang[j]), d - 2 - int(j));
        }
        out.dirs.push_back(chart_point(ang, 1.0, origin));
        out.w.push_back(w);
        std::size_t j = rules.size();
        while (j > 0) {
            --j;
            if (++idx[j] < rules[j].x.size()) break;
            idx[j] = 0;
            if (j == 0) return out;
        }
    }
}

std::vector<SurfaceNode> sphere_nodes(const HalfBallDomain& dom, int level) {
    if (level < 1) throw DomainError("sphere_nodes: level must be >= 1");
    const int m = dom.ep.m();
    const AngularRule ar = cap_rule(m, dom.ep.n(), level);
    std::vector<SurfaceNode> nodes;
    nodes.reserve(ar.dirs.size());
    const double area = std::pow(dom.R, m - 1);
    for (std::size_t q = 0; q < ar.dirs.size(); ++q) {
        SurfaceNode nd;
        nd.normal = ar.dirs[q];
        nd.point = ar.dirs[q];
        for (double& v : nd.point) v *= dom.R;
        nd.weight = ar.w[q] * area;
        nodes.push_back(std::move(nd));
    }
    return nodes;
}

std::vector<SurfaceNode> face_nodes(const HalfBallDomain& dom, int k, int level) {
    const int m = dom.ep.m(), n = dom.ep.n();
    if (k < 0 || k >= n) throw DomainError("face_nodes: axis out of range");
    if (level < 1) throw DomainError("face_nodes: level must be >= 1");
    const int d = m - 1;
    const AngularRule ar = cap_rule(d, n - 1, level);
    const QuadratureRule radial = gauss_legendre(level, 0.0, dom.R);
    std::vector<SurfaceNode> nodes;
    nodes.reserve(ar.dirs.size() * radial.x.size());
    for (std::size_t r = 0; r < radial.x.size(); ++r) {
        const double rho = radial.x[r];
        const double wr = radial.w[r] * std::pow(rho, d - 1);
        for (std::size_t q = 0; q < ar.dirs.size(); ++q) {
            SurfaceNode nd;
            nd.point.assign(m, 0.0);
            // face coordinates are the axes other than k, singular ones first
            for (int i = 0, c = 0; i < m; ++i) {
                if (i == k) continue;
                nd.point[i] = rho * ar.dirs[q][c++];
            }
            nd.weight = wr * ar.w[q];
            nd.normal.assign(m, 0.0);
            nd.normal[k] = -1.0;
            nodes.push_back(std::move(nd));
        }
    }
    return nodes;
}

bool contains(const HalfBallDomain& dom, const Point& x) {
    if (int(x.size()) != dom.ep.m()) throw DomainError("contains: dimension mismatch");
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    if (!(r2 < dom.R * dom.R)) return false;
    for (int k = 0; k < dom.ep.n(); ++k)
        if (!(x[k] > 0.0)) return false;
    return true;
}

}  // namespace gasp
