#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "gasp/errors.hpp"
#include "gasp/hyperfun.hpp"

// Limit of the spherical-mean sum: an n(n-1)/2-fold series over index tables
// whose terms carry unit-argument Gauss values. The summand decays only
// algebraically, so every index is summed explicitly up to kExplicit and the
// remainder is taken from a midpoint Euler-Maclaurin tail. The summand is a
// gamma-ratio expression and makes sense for non-integer indices, which is what
// the tail integral needs.

namespace gasp {

namespace {

// lgamma_r keeps the sign out of global state
double lg(double x) {
    int sign;
    return ::lgamma_r(x, &sign);
}

constexpr int kExplicit = 24;
constexpr double kStep = 0.1;       // double-exponential rule: nodes t = k * kStep
constexpr int kNodes = 40;          // k = -kNodes .. kNodes
constexpr double kCutoff = 1e12;    // beyond this the summand is treated as 0

class AlephSum {
public:
    AlephSum(const EllipticParams& ep) : ep_(ep), n_(ep.n()), shape_(ep.n()) {
        for (std::size_t e = 0; e < shape_.size(); ++e) lab_.push_back(shape_.label(e));
        at_ = ep.alpha_tilde();
        for (int k = 0; k < n_; ++k) {
            const double a = ep.alpha(k);
            base_ += log_gamma(2 - 2 * a) - 2 * log_gamma(1 - a);
        }
        base_ -= log_gamma(at_ + 1);
        // double-exponential nodes and weights for int_0^inf, x = exp(pi/2 sinh t)
        for (int k = -kNodes; k <= kNodes; ++k) {
            const double t = k * kStep;
            const double e = std::exp(M_PI / 2 * std::sinh(t));
            de_x_.push_back(e);
            de_w_.push_back(kStep * M_PI / 2 * std::cosh(t) * e);
        }
    }

    long evaluations() const { return evals_; }

    // One table term with real-valued entries: Pochhammer ratios times
    // Gauss's F(A_k, B_k; C_k; 1) written out through gamma functions.
    double term(const std::vector<double>& t) {
        ++evals_;
        std::vector<double> M(n_, 0.0), N(n_, 0.0);
        double D = 0.0;
        double s = base_;
        for (std::size_t e = 0; e < t.size(); ++e) {
            const auto [i, j] = lab_[e];
            const double v = t[e];
            D += v;
            M[j - 1] += v;
            M[i - 2] += v;
            for (int k = i - 2; k < n_; ++k) N[k] += v;
            s -= lg(v + 1);
        }
        s += lg(at_ + 1 + D);
        for (int k = 0; k < n_; ++k) {
            const double a = ep_.alpha(k);
            s += lg(1 - a + M[k]) + lg(at_ + a + N[k] - M[k]) -
                 lg(at_ + 1 + N[k]);
        }
        if (!std::isfinite(s)) return 0.0;
        return std::exp(s);
    }

    double level(std::vector<double>& t, std::size_t lev) {
        auto f = [&](double x) -> double {
            if (x > kCutoff) return 0.0;
            t[lev] = x;
            return lev + 1 == t.size() ? term(t) : level(t, lev + 1);
        };
        double S = 0.0;
        for (int j = 0; j < kExplicit; ++j) S += f(j);
        const double a = kExplicit - 0.5;
        double tail = 0.0;
        for (std::size_t q = 0; q < de_x_.size(); ++q) tail += de_w_[q] * f(a + de_x_[q]);
        const double h = 0.25;
        const double slope = (f(a + h) - f(a - h)) / (2 * h);
        t[lev] = 0.0;
        return S + tail + slope / 24;
    }

    static double cost(std::size_t T) {
        return std::pow(double(kExplicit + 2 * kNodes + 3), double(T));
    }

private:
    const EllipticParams& ep_;
    int n_;
    IndexAssignment shape_;
    std::vector<std::pair<int, int>> lab_;
    double at_ = 0.0;
    double base_ = 0.0;
    std::vector<double> de_x_, de_w_;
    long evals_ = 0;
};

}  // namespace

AlephLimit aleph_limit(const EllipticParams& ep, const SeriesControl& ctl) {
    ctl.validate();
    AlephLimit out;
    double lc = log_gamma(ep.m() / 2.0) - log_gamma(ep.alpha_tilde() + 1);
    for (double a : ep.alpha()) lc += log_gamma(2 - 2 * a) - log_gamma(1 - a);
    out.closed_form = std::exp(lc);

    AlephSum sum(ep);
    const std::size_t T = IndexAssignment::entry_count(ep.n());
    if (T == 0) {
        out.series.value = sum.term({});
        out.series.terms_used = 1;
        return out;
    }
    if (AlephSum::cost(T) > double(ctl.max_total_terms)) {
        out.series.value = std::numeric_limits<double>::quiet_NaN();
        out.series.converged = false;
        out.series.abs_error_estimate = std::numeric_limits<double>::infinity();
        return out;
    }
    std::vector<double> t(T, 0.0);
    out.series.value = sum.level(t, 0);
    out.series.terms_used = sum.evaluations();
    out.series.abs_error_estimate = std::fabs(out.series.value) * 1e-8;
    return out;
}

}  // namespace gasp
