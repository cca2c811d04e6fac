#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gasp/errors.hpp"
#include "gasp/hyperfun.hpp"

namespace gasp {

namespace {

void check_args(const LauricellaParams& p, const std::vector<double>& z, const SeriesControl& ctl) {
    ctl.validate();
    p.validate();
    if (z.size() != p.n()) throw DomainError("F_A: argument count differs from n");
    for (double v : z)
        if (std::isnan(v)) throw DomainError("F_A: NaN argument");
}

// number of n-tuples of non-negative integers with sum d
double tuples_in_layer(long d, std::size_t n) {
    double c = 1.0;
    for (std::size_t i = 1; i < n; ++i) c = c * double(d + long(i)) / double(i);
    return c;
}

}  // namespace

EvalResult lauricella_fa_direct(const LauricellaParams& p, const std::vector<double>& z,
                                const SeriesControl& ctl) {
    check_args(p, z, ctl);
    double zsum = 0.0;
    for (double v : z) zsum += std::fabs(v);
    if (!(zsum < 1.0)) throw DomainError("lauricella_fa_direct: requires sum |z_k| < 1");

    const std::size_t n = p.n();
    // g[k][m] = (b_k)_m z_k^m / ((c_k)_m m!);  conv[k] = g[0] * ... * g[k] (Cauchy products),
    // so conv[n-1][d] is the sum over all index tuples of degree d.
    std::vector<std::vector<double>> g(n), conv(n);
    EvalResult res;
    double S = 0.0, poch = 1.0, prev_layer = 0.0;
    double tuples = 0.0;
    long d = 0;
    for (;; ++d) {
        for (std::size_t k = 0; k < n; ++k) {
            if (d == 0) {
                g[k].push_back(1.0);
            } else {
                const double m = double(d - 1);
                g[k].push_back(g[k].back() * (p.b[k] + m) / ((p.c[k] + m) * (m + 1.0)) * z[k]);
            }
            double v;
            if (k == 0) {
                v = g[0][d];
            } else {
                v = 0.0;
                for (long j = 0; j <= d; ++j) v += conv[k - 1][d - j] * g[k][j];
            }
            conv[k].push_back(v);
        }
        if (d > 0) poch *= p.a + double(d - 1);
        const double layer = poch * conv[n - 1][d];
        S += layer;
        tuples += tuples_in_layer(d, n);
        const double tol = ctl.rel_tol * std::fabs(S);
        if (d >= 1 && std::fabs(layer) <= tol && std::fabs(prev_layer) <= tol) {
            res.abs_error_estimate = std::fabs(layer) + std::fabs(prev_layer);
            break;
        }
        if (d >= ctl.max_terms_per_axis || tuples >= double(ctl.max_total_terms)) {
            res.converged = false;
            res.abs_error_estimate = std::fabs(layer) + std::fabs(prev_layer);
            break;
        }
        prev_layer = layer;
    }
    res.value = S;
    res.terms_used = long(tuples);
    return res;
}

namespace {

struct Table {
    std::vector<int> m;   // entries in IndexAssignment order
    std::vector<int> M;   // M(k,n), k = 0..n-1
    std::vector<int> N;   // N(k,n)
    int first_nonzero;    // position of the first nonzero entry (size() for the zero table)
    double coef;          // (a)_{N(n,n)} / prod m! * prod (b_k)_{M_k} / (c_k)_{M_k}, as coef * 2^coef_exp
    long coef_exp;
};

}  // namespace

EvalResult lauricella_fa_decomposed(const LauricellaParams& p, const std::vector<double>& z,
                                    const SeriesControl& ctl) {
    check_args(p, z, ctl);
    for (double v : z)
        if (!(v < 1.0)) throw DomainError("lauricella_fa_decomposed: requires every z_k < 1");

    const int n = int(p.n());
    const IndexAssignment shape(n);
    const std::size_t T = shape.size();
    // entry e contributes to M at axes j-1 and i-2 (0-based), and to N at axes >= i-2
    std::vector<std::pair<int, int>> lab(T);
    for (std::size_t e = 0; e < T; ++e) lab[e] = shape.label(e);

    EvalResult res;
    std::vector<std::map<std::pair<int, int>, detail::ScaledValue>> cache(static_cast<std::size_t>(n));
    bool inner_ok = true;
    double inner_err = 0.0;
    long gauss_terms = 0;
    auto factor = [&](int k, int N, int M) -> const detail::ScaledValue& {
        auto key = std::make_pair(N, M);
        auto it = cache[k].find(key);
        if (it == cache[k].end()) {
            detail::ScaledValue r = detail::gauss_power_term_scaled(p.a + N, p.b[k] + M, p.c[k] + M, z[k], M,
                                                                    ctl.max_total_terms, ctl.rel_tol);
            gauss_terms += r.terms_used;
            it = cache[k].emplace(key, r).first;
        }
        return it->second;
    };

    std::vector<Table> layer(1);
    layer[0].m.assign(T, 0);
    layer[0].M.assign(std::size_t(n), 0);
    layer[0].N.assign(std::size_t(n), 0);
    layer[0].first_nonzero = int(T);
    layer[0].coef = 1.0;
    layer[0].coef_exp = 0;

    double S = 0.0, prev = 0.0;
    long tables = 0;
    bool axis_capped = false;
    for (int d = 0;; ++d) {
        double L = 0.0;
        for (const Table& t : layer) {
            double mant = t.coef;
            long e2 = t.coef_exp;
            double rel = 0.0;
            for (int k = 0; k < n && mant != 0.0; ++k) {
                const detail::ScaledValue& f = factor(k, t.N[k], t.M[k]);
                if (!f.converged) inner_ok = false;
                if (f.mant != 0.0) rel += f.err_mant / std::fabs(f.mant);
                int fe;
                mant = std::frexp(mant * f.mant, &fe);
                e2 += f.exp2 + fe;
            }
            const double term = mant == 0.0 ? 0.0 : std::ldexp(mant, int(std::clamp(e2, -100000L, 100000L)));
            inner_err += std::fabs(term) * rel;
            L += term;
        }
        tables += long(layer.size());
        S += L;
        const double tol = ctl.rel_tol * std::fabs(S);
        if (T == 0 || (d >= 1 && std::fabs(L) <= tol && std::fabs(prev) <= tol)) {
            res.abs_error_estimate = std::fabs(L) + std::fabs(prev) + inner_err;
            break;
        }
        if (tables >= ctl.max_total_terms) {
            res.converged = false;
            res.abs_error_estimate = std::fabs(L) + std::fabs(prev) + inner_err;
            break;
        }
        prev = L;

        std::vector<Table> next;
        for (const Table& t : layer) {
            const int lim = t.first_nonzero == int(T) ? int(T) - 1 : t.first_nonzero;
            for (int e = 0; e <= lim; ++e) {
                if (t.m[e] >= ctl.max_terms_per_axis) {
                    axis_capped = true;
                    continue;
                }
                Table c = t;
                const auto [i, j] = lab[e];
                double r = (p.a + double(d)) / double(c.m[e] + 1);
                for (int k : {j - 1, i - 2}) {
                    r *= (p.b[k] + c.M[k]) / (p.c[k] + c.M[k]);
                    c.M[k] += 1;
                }
                for (int k = i - 2; k < n; ++k) c.N[k] += 1;
                c.m[e] += 1;
                c.first_nonzero = e;
                int fe;
                c.coef = std::frexp(t.coef * r, &fe);
                c.coef_exp = t.coef_exp + fe;
                next.push_back(std::move(c));
            }
        }
        if (next.empty()) {
            res.converged = false;
            res.abs_error_estimate = std::fabs(L) + std::fabs(prev) + inner_err;
            break;
        }
        layer.swap(next);
    }
    if (axis_capped || !inner_ok) res.converged = false;
    res.value = S;
    res.terms_used = tables + gauss_terms;
    return res;
}

EvalResult fa_partial_derivative(const LauricellaParams& p, const std::vector<double>& z, int j,
                                 const SeriesControl& ctl) {
    p.validate();
    if (j < 0 || j >= int(p.n())) throw DomainError("fa_partial_derivative: axis out of range");
    LauricellaParams q = p;
    q.a += 1.0;
    q.b[j] += 1.0;
    q.c[j] += 1.0;
    EvalResult r = lauricella_fa_decomposed(q, z, ctl);
    const double f = p.a * p.b[j] / p.c[j];
    r.value *= f;
    r.abs_error_estimate *= std::fabs(f);
    return r;
}

double adjacent_relation_residual(const LauricellaParams& p, const std::vector<double>& z,
                                  const SeriesControl& ctl) {
    p.validate();
    double zsum = 0.0;
    for (double v : z) zsum += std::fabs(v);
    auto eval = [&](const LauricellaParams& q) {
        return zsum < 1.0 ? lauricella_fa_direct(q, z, ctl).value
                          : lauricella_fa_decomposed(q, z, ctl).value;
    };
    double lhs = 0.0;
    for (std::size_t j = 0; j < p.n(); ++j) {
        if (z[j] == 0.0) continue;
        LauricellaParams q = p;
        q.a += 1.0;
        q.b[j] += 1.0;
        q.c[j] += 1.0;
        lhs += p.b[j] / p.c[j] * z[j] * eval(q);
    }
    LauricellaParams up = p;
    up.a += 1.0;
    const double rhs = eval(up) - eval(p);
    return std::fabs(lhs - rhs);
}

}  // namespace gasp
