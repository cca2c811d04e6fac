#include <algorithm>
#include <cmath>
#include <string>

#include "gasp/errors.hpp"
#include "gasp/oracle.hpp"

namespace gasp {

std::size_t FdGrid::index(const std::vector<int>& ijk) const {
    std::size_t id = 0;
    for (std::size_t a = 0; a < count.size(); ++a) id = id * count[a] + ijk[a];
    return id;
}

double FdGrid::interpolate(const Point& x) const {
    const std::size_t d = count.size();
    if (x.size() != d) throw DomainError("FdGrid::interpolate: dimension mismatch");
    std::vector<int> base(d);
    std::vector<double> frac(d);
    for (std::size_t a = 0; a < d; ++a) {
        const double s = (x[a] - lower[a]) / h;
        int i = int(std::floor(s));
        i = std::clamp(i, 0, count[a] - 2);
        base[a] = i;
        frac[a] = s - i;
    }
    double v = 0.0;
    std::vector<int> c(d);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        double w = 1.0;
        for (std::size_t a = 0; a < d; ++a) {
            const int bit = (mask >> a) & 1;
            c[a] = base[a] + bit;
            w *= bit ? frac[a] : 1.0 - frac[a];
        }
        const std::size_t id = index(c);
        if (kind[id] == 0) throw DomainError("FdGrid::interpolate: cell touches the exterior");
        v += w * values[id];
    }
    return v;
}

namespace {

struct Row {
    std::size_t node;
    double diag;
    double rhs;  // contribution of known boundary values
    std::vector<std::pair<std::size_t, double>> off;
};

}  // namespace

FdGrid fd_solve(const EllipticParams& ep, const HalfBallDomain& dom, const BoundaryData& data, double h,
                int max_sweeps) {
    const int m = ep.m(), n = ep.n();
    if (m != 2 && m != 3) throw DomainError("fd_solve: only m = 2 or 3");
    const double R = dom.R;
    if (!(h > 0.0) || R / h < 20.0) throw DomainError("fd_solve: need at least 20 nodes per axis");
    if (int(data.tau.size()) != n || !data.phi) throw DomainError("fd_solve: boundary data incomplete");

    FdGrid g;
    g.h = h;
    const int half = int(std::lround(R / h));
    for (int a = 0; a < m; ++a) {
        g.lower.push_back(a < n ? 0.0 : -half * h);
        g.count.push_back(a < n ? half + 1 : 2 * half + 1);
    }
    std::size_t total = 1;
    for (int c : g.count) total *= c;
    g.values.assign(total, 0.0);
    g.kind.assign(total, 0);

    auto coord = [&](std::size_t id) {
        Point x(m);
        for (int a = m - 1; a >= 0; --a) {
            x[a] = g.lower[a] + (id % g.count[a]) * h;
            id /= g.count[a];
        }
        return x;
    };
    auto norm2 = [](const Point& x) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
    };

    for (std::size_t id = 0; id < total; ++id) {
        const Point x = coord(id);
        if (norm2(x) >= R * R * (1.0 - 1e-14)) continue;
        int face = -1;
        for (int k = 0; k < n; ++k)
            if (x[k] < 0.5 * h) {
                face = k;
                break;
            }
        if (face >= 0) {
            g.kind[id] = 2;
            g.values[id] = data.tau[face](x);
        } else {
            g.kind[id] = 1;
        }
    }

    std::vector<std::size_t> stride(m);
    {
        std::size_t s = 1;
        for (int a = m - 1; a >= 0; --a) {
            stride[a] = s;
            s *= g.count[a];
        }
    }

    std::vector<Row> rows;
    for (std::size_t id = 0; id < total; ++id) {
        if (g.kind[id] != 1) continue;
        const Point x = coord(id);
        Row row{id, 0.0, 0.0, {}};
        for (int a = 0; a < m; ++a) {
            const int ia = int((id / stride[a]) % g.count[a]);
            double arm[2];
            double known[2];
            std::size_t nb[2];
            bool inside[2];
            for (int s = 0; s < 2; ++s) {
                const int dir = s == 0 ? -1 : 1;
                const int j = ia + dir;
                inside[s] = false;
                if (j >= 0 && j < g.count[a]) {
                    nb[s] = dir < 0 ? id - stride[a] : id + stride[a];
                    if (g.kind[nb[s]] != 0) inside[s] = true;
                }
                if (inside[s]) {
                    arm[s] = h;
                } else {
                    // distance along the axis to the sphere
                    const double rest = R * R - norm2(x) + x[a] * x[a];
                    const double t = std::sqrt(std::max(rest, 0.0));
                    arm[s] = dir > 0 ? t - x[a] : x[a] + t;
                    arm[s] = std::clamp(arm[s], 1e-12 * h, h);
                    Point y = x;
                    y[a] += dir * arm[s];
                    known[s] = data.phi(y);
                }
            }
            const double hl = arm[0], hr = arm[1];
            double wl, wr;
            if (a < n) {
                // flux form (x^{2a} u')' / x^{2a}, with face fluxes exact for 1 and x^{1-2a}
                const double e = 1.0 - 2.0 * ep.alpha(a);
                const double xa = x[a];
                auto flux = [e](double lo, double hi) { return e / (std::pow(hi, e) - std::pow(lo, e)); };
                const double vol = std::pow(xa, 1.0 - e) * 0.5 * (hl + hr);
                wl = flux(xa - hl, xa) / vol;
                wr = flux(xa, xa + hr) / vol;
            } else {
                wl = 2.0 / (hl * (hl + hr));
                wr = 2.0 / (hr * (hl + hr));
            }
            row.diag += wl + wr;
            if (inside[0]) row.off.push_back({nb[0], wl});
            else row.rhs += wl * known[0];
            if (inside[1]) row.off.push_back({nb[1], wr});
            else row.rhs += wr * known[1];
        }
        rows.push_back(std::move(row));
    }

    const double omega = 2.0 / (1.0 + std::sin(M_PI * h / (2.0 * R)));
    double bmax = 0.0;
    for (std::size_t id = 0; id < total; ++id)
        if (g.kind[id] == 2) bmax = std::max(bmax, std::fabs(g.values[id]));
    for (const Row& r : rows) bmax = std::max(bmax, std::fabs(r.rhs / r.diag));

    int sweep = 0;
    double change = 0.0;
    for (; sweep < max_sweeps; ++sweep) {
        change = 0.0;
        for (const Row& r : rows) {
            double s = r.rhs;
            for (const auto& [j, w] : r.off) s += w * g.values[j];
            const double target = s / r.diag;
            const double d = target - g.values[r.node];
            change = std::max(change, std::fabs(d));
            g.values[r.node] += omega * d;
        }
        if (change < 1e-11 * std::max(bmax, 1.0)) break;
    }
    g.iterations = sweep + 1;
    g.residual = change;
    if (sweep == max_sweeps)
        throw ConvergenceError("fd_solve: relaxation did not converge after " + std::to_string(max_sweeps) +
                               " sweeps");
    return g;
}

}  // namespace gasp
