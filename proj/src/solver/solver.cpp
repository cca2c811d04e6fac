#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "gasp/errors.hpp"
#include "gasp/solver.hpp"

namespace gasp {

int default_level(int m) { return m == 2 ? 16 : m == 3 ? 12 : 8; }

namespace {

struct Piece {
    int face;  // -1 for the sphere
    std::vector<SurfaceNode> nodes;
};

std::vector<Piece> discretize(const DirichletProblem& p) {
    std::vector<Piece> pieces;
    pieces.push_back({-1, sphere_nodes(p.dom, p.level)});
    for (int k = 0; k < p.dom.ep.n(); ++k) pieces.push_back({k, face_nodes(p.dom, k, p.level)});
    return pieces;
}

double dist(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

Clearance clearance(const DirichletProblem& p, const std::vector<Piece>& pieces, const Point& xi) {
    Clearance c;
    double r = 0.0;
    for (double v : xi) r += v * v;
    c.distance = p.dom.R - std::sqrt(r);
    for (int k = 0; k < p.dom.ep.n(); ++k) c.distance = std::min(c.distance, xi[k]);
    // spacing around the node closest to xi: the 2(m-1)-th nearest neighbour in its piece
    const Piece* best = nullptr;
    std::size_t bi = 0;
    double bd = INFINITY;
    for (const Piece& pc : pieces)
        for (std::size_t i = 0; i < pc.nodes.size(); ++i) {
            const double d = dist(pc.nodes[i].point, xi);
            if (d < bd) {
                bd = d;
                best = &pc;
                bi = i;
            }
        }
    std::vector<double> nd;
    for (std::size_t i = 0; i < best->nodes.size(); ++i)
        if (i != bi) nd.push_back(dist(best->nodes[i].point, best->nodes[bi].point));
    std::sort(nd.begin(), nd.end());
    const std::size_t want = std::size_t(2 * (p.dom.ep.m() - 1)) - 1;
    c.spacing = nd.empty() ? 0.0 : nd[std::min(want, nd.size() - 1)];
    return c;
}

void check_probe(const DirichletProblem& p, const std::vector<Piece>& pieces, const Point& xi) {
    if (int(xi.size()) != p.dom.ep.m()) throw DomainError("solve_at: probe dimension differs from m");
    if (!contains(p.dom, xi)) throw DomainError("solve_at: probe outside the domain");
    const Clearance c = clearance(p, pieces, xi);
    if (c.distance < 2.0 * c.spacing) {
        std::ostringstream os;
        os.precision(6);
        os << "solve_at: probe too close to the boundary (distance " << c.distance
           << " < 2 x node spacing " << c.spacing << "); raise the level";
        throw DomainError(os.str());
    }
}

std::string where(const Point& x) {
    std::ostringstream os;
    os.precision(17);
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << ")";
    return os.str();
}

double weight_power(const EllipticParams& ep, const Point& x, int skip) {
    double lw = 0.0;
    for (int i = 0; i < ep.n(); ++i)
        if (i != skip) lw += 2.0 * ep.alpha(i) * std::log(x[i]);
    return std::exp(lw);
}

double node_term(const DirichletProblem& p, const Piece& pc, const SurfaceNode& nd, const Point& xi) {
    const EllipticParams& ep = p.dom.ep;
    try {
        if (pc.face < 0) {
            const double dn = green_normal_derivative(ep, nd.point, xi, p.dom.R, p.ctl);
            return -nd.weight * weight_power(ep, nd.point, -1) * dn * p.data.phi(nd.point);
        }
        const double gk = boundary_kernel(ep, pc.face, nd.point, xi, p.dom.R, p.ctl);
        return nd.weight * weight_power(ep, nd.point, pc.face) * gk * p.data.tau[pc.face](nd.point);
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(std::string(e.what()) + " at boundary node " + where(nd.point) +
                               " for probe " + where(xi));
    }
}

double solve_prepared(const DirichletProblem& p, const std::vector<Piece>& pieces, const Point& xi) {
    check_probe(p, pieces, xi);
    std::vector<std::pair<const Piece*, const SurfaceNode*>> all;
    for (const Piece& pc : pieces)
        for (const SurfaceNode& nd : pc.nodes) all.push_back({&pc, &nd});
    std::vector<double> contrib(all.size(), 0.0);

    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), all.size() / 8));
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](std::size_t w) {
        try {
            for (std::size_t i = w; i < all.size(); i += workers)
                contrib[i] = node_term(p, *all[i].first, *all[i].second, xi);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    // fixed summation order, independent of the thread count
    double u = 0.0;
    for (double c : contrib) u += c;
    return u;
}

void check_problem(const DirichletProblem& p) {
    p.ctl.validate();
    if (p.level < 1) throw DomainError("DirichletProblem: level must be >= 1");
    if (!(p.dom.R > 0.0)) throw DomainError("DirichletProblem: radius must be positive");
    if (int(p.data.tau.size()) != p.dom.ep.n())
        throw DomainError("DirichletProblem: need one face function per singular axis");
    if (!p.data.phi) throw DomainError("DirichletProblem: missing sphere data");
    for (const auto& t : p.data.tau)
        if (!t) throw DomainError("DirichletProblem: missing face data");
}

}  // namespace

Clearance probe_clearance(const DirichletProblem& p, const Point& xi) {
    check_problem(p);
    return clearance(p, discretize(p), xi);
}

double solve_at(const DirichletProblem& p, const Point& xi) {
    check_problem(p);
    return solve_prepared(p, discretize(p), xi);
}

std::vector<double> solve_grid(const DirichletProblem& p, const std::vector<Point>& probes) {
    check_problem(p);
    std::vector<double> out;
    if (probes.empty()) return out;
    const std::vector<Piece> pieces = discretize(p);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        try {
            out.push_back(solve_prepared(p, pieces, probes[i]));
        } catch (const DomainError& e) {
            throw DomainError("probe " + std::to_string(i) + ": " + e.what());
        } catch (const ConvergenceError& e) {
            throw ConvergenceError("probe " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

MatchingReport check_matching(const DirichletProblem& p, int samples) {
    check_problem(p);
    if (samples < 1) throw DomainError("check_matching: samples must be >= 1");
    const int m = p.dom.ep.m(), n = p.dom.ep.n();
    const double R = p.dom.R;
    MatchingReport rep;
    auto level_for = [&](int dims) {
        if (dims <= 1) return std::max(1, samples);
        return std::max(1, int(std::ceil(std::pow(double(samples), 1.0 / dims))));
    };

    // corners: x_1 = ... = x_n = 0, remaining coordinates inside the ball
    if (n >= 2) {
        std::vector<Point> pts{Point(m, 0.0)};
        const int free = m - n;
        if (free >= 1) {
            const int L = level_for(free);
            const AngularRule ar = cap_rule(free, 0, L);
            const QuadratureRule rad = gauss_legendre(L, 0.0, R);
            for (double rho : rad.x)
                for (const auto& d : ar.dirs) {
                    Point x(m, 0.0);
                    for (int i = 0; i < free; ++i) x[n + i] = rho * d[i];
                    pts.push_back(x);
                }
        }
        for (const Point& x : pts) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    rep.corner_max = std::max(rep.corner_max, std::fabs(p.data.tau[i](x) - p.data.tau[j](x)));
            ++rep.corner_samples;
        }
    }

    // rims: x_k = 0 and |x| = R, other singular coordinates >= 0
    for (int k = 0; k < n; ++k) {
        const AngularRule ar = cap_rule(m - 1, n - 1, level_for(std::max(1, m - 2)));
        for (const auto& d : ar.dirs) {
            Point x(m, 0.0);
            for (int i = 0, c = 0; i < m; ++i) {
                if (i == k) continue;
                x[i] = R * d[c++];
            }
            rep.rim_max = std::max(rep.rim_max, std::fabs(p.data.tau[k](x) - p.data.phi(x)));
            ++rep.rim_samples;
        }
    }
    return rep;
}

}  // namespace gasp
