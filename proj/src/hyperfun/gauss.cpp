#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gasp/errors.hpp"
#include "gasp/hyperfun.hpp"

namespace gasp {

namespace {

bool nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

// A negative parameter that is not an integer makes the terms change sign
// without terminating the series.
int bad_params(double p, double q) {
    return int(p < 0.0 && !nonpositive_integer(p)) + int(q < 0.0 && !nonpositive_integer(q));
}

bool prefer_keep_a(const GaussParams& p) {
    return bad_params(p.a, p.c - p.b) <= bad_params(p.c - p.a, p.b);
}

constexpr int kScaleStep = 600;
const double kBig = std::ldexp(1.0, kScaleStep);
const double kSmall = std::ldexp(1.0, -kScaleStep);

// sign * exp(log_pref) * sum_j (A)_j (B)_j / ((C)_j j!) w^j, 0 <= w < 1.
detail::ScaledValue scaled_series(double A, double B, double C, double w, double log_pref, int sign,
                                  long max_terms, double rel_tol) {
    detail::ScaledValue res;
    if (log_pref == -std::numeric_limits<double>::infinity()) return res;
    long E = long(std::floor(log_pref / M_LN2));
    double t = std::exp(log_pref - double(E) * M_LN2);
    double S = 0.0;
    const double s = C - A - B;
    // from this index on every ratio has the sign of w
    const double settle = std::max({0.0, -A, -B, -C}) + 1.0;
    int quiet = 0;
    double err = 0.0;
    long j = 0;
    for (;;) {
        S += t;
        ++j;
        const double jm = double(j - 1);
        const double ratio = (A + jm) * (B + jm) / ((C + jm) * (jm + 1.0)) * w;
        t *= ratio;
        if (t == 0.0) {
            err = 0.0;
            break;
        }
        bool small = false;
        if (double(j) > settle && ratio > 0.0 && ratio < 1.0) {
            const double denom = std::min(1.0 - ratio, (1.0 - w) + std::max(s, 0.0) / double(j));
            err = std::fabs(t) / denom;
            small = err <= rel_tol * std::fabs(S);
        } else {
            err = std::fabs(t);
        }
        quiet = small ? quiet + 1 : 0;
        if (quiet >= 2) break;
        if (j >= max_terms) {
            res.converged = false;
            break;
        }
        const double mag = std::max(std::fabs(t), std::fabs(S));
        if (mag > kBig) {
            t = std::ldexp(t, -kScaleStep);
            S = std::ldexp(S, -kScaleStep);
            E += kScaleStep;
        } else if (mag < kSmall) {
            t = std::ldexp(t, kScaleStep);
            S = std::ldexp(S, kScaleStep);
            E -= kScaleStep;
        }
    }
    res.mant = sign * S;
    res.exp2 = E;
    res.err_mant = err;
    res.terms_used = j;
    return res;
}

void check_c(double c) {
    if (nonpositive_integer(c)) throw DomainError("gauss_2f1: c is zero or a negative integer");
}

}  // namespace

PfaffForm pfaff_transform(const GaussParams& p, bool keep_a) {
    if (!(p.x < 1.0)) throw DomainError("pfaff_transform: requires x < 1");
    PfaffForm f;
    f.params.c = p.c;
    f.params.x = p.x / (p.x - 1.0);
    if (keep_a) {
        f.prefactor = std::exp(-p.a * std::log1p(-p.x));
        f.params.a = p.a;
        f.params.b = p.c - p.b;
    } else {
        f.prefactor = std::exp(-p.b * std::log1p(-p.x));
        f.params.a = p.c - p.a;
        f.params.b = p.b;
    }
    return f;
}

EvalResult gauss_2f1(const GaussParams& p, const SeriesControl& ctl) {
    ctl.validate();
    check_c(p.c);
    if (std::isnan(p.x) || p.x > 1.0) throw DomainError("gauss_2f1: argument exceeds 1");
    if (p.x == 1.0) {
        const double s = p.c - p.a - p.b;
        if (!(s > 0.0)) throw DivergenceError("gauss_2f1: x = 1 requires c - a - b > 0");
        EvalResult r;
        r.terms_used = 0;
        if (nonpositive_integer(p.c - p.a) || nonpositive_integer(p.c - p.b)) {
            r.value = 0.0;
            return r;
        }
        int s1, s2, s3, s4;
        const double lv = detail::log_abs_gamma(p.c, &s1) + detail::log_abs_gamma(s, &s2) -
                          detail::log_abs_gamma(p.c - p.a, &s3) - detail::log_abs_gamma(p.c - p.b, &s4);
        r.value = s1 * s2 * s3 * s4 * std::exp(lv);
        r.abs_error_estimate = 1e-14 * std::fabs(r.value);
        return r;
    }
    return detail::gauss_power_term(p.a, p.b, p.c, p.x, 0, ctl.max_total_terms, ctl.rel_tol);
}

EvalResult detail::gauss_power_term(double A, double B, double C, double z, long M, long max_terms,
                                    double rel_tol) {
    const ScaledValue v = gauss_power_term_scaled(A, B, C, z, M, max_terms, rel_tol);
    EvalResult r;
    r.value = std::ldexp(v.mant, int(std::clamp(v.exp2, -100000L, 100000L)));
    r.abs_error_estimate = std::ldexp(v.err_mant, int(std::clamp(v.exp2, -100000L, 100000L)));
    r.terms_used = v.terms_used;
    r.converged = v.converged;
    return r;
}

detail::ScaledValue detail::gauss_power_term_scaled(double A, double B, double C, double z, long M,
                                                    long max_terms, double rel_tol) {
    check_c(C);
    if (!(z < 1.0)) throw DomainError("gauss_power_term: requires z < 1");
    if (z == 0.0) {
        ScaledValue r;
        r.mant = M == 0 ? 1.0 : 0.0;
        r.terms_used = 1;
        return r;
    }
    if (z > 0.0) return scaled_series(A, B, C, z, double(M) * std::log(z), 1, max_terms, rel_tol);

    // z^M F(A,B;C;z) = (-1)^M w^M (1-w)^{P-M} F(P, C-Q; C; w), (P,Q) = (A,B) or (B,A)
    const double w = z / (z - 1.0);
    const double log1mw = -std::log1p(-z);
    const int sign = (M % 2 == 0) ? 1 : -1;
    const GaussParams gp{A, B, C, z};
    const double P = prefer_keep_a(gp) ? A : B;
    const double Q = prefer_keep_a(gp) ? B : A;
    const double log_pref = (M > 0 ? double(M) * std::log(w) : 0.0) + (P - double(M)) * log1mw;
    return scaled_series(P, C - Q, C, w, log_pref, sign, max_terms, rel_tol);
}

}  // namespace gasp
