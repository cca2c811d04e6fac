#include <cmath>
#include <string>

#include "gasp/errors.hpp"
#include "gasp/hyperfun.hpp"

namespace gasp {

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
    int sign = 1;
    return ::lgamma_r(x, &sign);
}

double detail::log_abs_gamma(double x, int* sign) {
    if (x <= 0.0 && x == std::floor(x))
        throw DomainError("gamma: pole at " + std::to_string(x));
    int s = 1;
    double v = ::lgamma_r(x, &s);
    if (sign) *sign = s;
    return v;
}

double pochhammer(double a, long k) {
    if (k < 0) throw DomainError("pochhammer: negative count");
    if (k > 100000 && a > 0.0) return std::exp(log_gamma(a + double(k)) - log_gamma(a));
    double p = 1.0;
    for (long i = 0; i < k; ++i) p *= a + double(i);
    return p;
}

double surface_constant(int m) {
    if (m < 2) throw DomainError("surface_constant: m must be at least 2");
    const int p = m / 2;
    double v;
    if (m % 2 == 0) {
        v = 2.0 * std::pow(M_PI, p);
        for (int i = 2; i <= p - 1; ++i) v /= i;
    } else {
        v = std::pow(2.0, p + 1) * std::pow(M_PI, p);
        for (int i = 3; i <= 2 * p - 1; i += 2) v /= i;
    }
    return v;
}

void SeriesControl::validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("SeriesControl: rel_tol must be positive");
    if (max_terms_per_axis < 1) throw DomainError("SeriesControl: max_terms_per_axis must be >= 1");
    if (max_total_terms < 1) throw DomainError("SeriesControl: max_total_terms must be >= 1");
}

static bool nonpositive_integer(double c) { return c <= 0.0 && c == std::floor(c); }

void LauricellaParams::validate() const {
    if (b.empty() || b.size() != c.size())
        throw DomainError("LauricellaParams: b and c must have equal length n >= 1");
    for (double ck : c)
        if (nonpositive_integer(ck)) throw DomainError("LauricellaParams: c_k is zero or a negative integer");
}

IndexAssignment::IndexAssignment(int n) : n_(n), values_(entry_count(n), 0) {
    if (n < 1) throw DomainError("IndexAssignment: n must be >= 1");
}

std::size_t IndexAssignment::entry_count(int n) {
    return n < 2 ? 0 : std::size_t(n - 1) * std::size_t(n) / 2;
}

std::size_t IndexAssignment::offset(int i, int j) const {
    if (i < 2 || j < i || j > n_) throw DomainError("IndexAssignment: entry out of range");
    // rows 2..i-1 hold n-1, n-2, ... entries
    std::size_t before = 0;
    for (int r = 2; r < i; ++r) before += std::size_t(n_ - r + 1);
    return before + std::size_t(j - i);
}

std::pair<int, int> IndexAssignment::label(std::size_t e) const {
    for (int i = 2; i <= n_; ++i) {
        const std::size_t row = std::size_t(n_ - i + 1);
        if (e < row) return {i, i + int(e)};
        e -= row;
    }
    throw DomainError("IndexAssignment: position out of range");
}

int IndexAssignment::degree() const {
    int d = 0;
    for (int v : values_) d += v;
    return d;
}

std::pair<int, int> index_maps(const IndexAssignment& asg, int k, int n) {
    if (n != asg.n()) throw DomainError("index_maps: table sized for a different n");
    if (k < 1 || k > n) throw DomainError("index_maps: k out of range");
    int M = 0;
    for (int i = 2; i <= k; ++i) M += asg(i, k);
    for (int i = k + 1; i <= n; ++i) M += asg(k + 1, i);
    int N = 0;
    for (int i = 2; i <= k + 1 && i <= n; ++i)
        for (int j = i; j <= n; ++j) N += asg(i, j);
    return {M, N};
}

}  // namespace gasp
