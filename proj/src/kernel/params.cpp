#include <cmath>
#include <string>

#include "gasp/errors.hpp"
#include "gasp/hyperfun.hpp"
#include "gasp/params.hpp"

namespace gasp {

EllipticParams::EllipticParams(int m, std::vector<double> alpha) : m_(m), alpha_(std::move(alpha)) {
    if (m_ < 2) throw DomainError("EllipticParams: m must be at least 2");
    if (alpha_.empty() || int(alpha_.size()) > m_)
        throw DomainError("EllipticParams: need 1 <= n <= m singular axes");
    for (double a : alpha_)
        if (!(a > 0.0 && 2.0 * a < 1.0))
            throw DomainError("EllipticParams: alpha_k must satisfy 0 < 2 alpha_k < 1, got " + std::to_string(a));
    alpha_tilde_ = (m_ - 2) / 2.0 + n() - alpha_sum();
    gamma_n_ = normalization(*this);
}

double EllipticParams::alpha_sum() const {
    double s = 0.0;
    for (double a : alpha_) s += a;
    return s;
}

double normalization(const EllipticParams& ep) {
    const double at = (ep.m() - 2) / 2.0 + ep.n() - ep.alpha_sum();
    double lv = (2.0 * at - ep.m()) * M_LN2 + log_gamma(at) - 0.5 * ep.m() * std::log(M_PI);
    for (double a : ep.alpha()) lv += log_gamma(1.0 - a) - log_gamma(2.0 - 2.0 * a);
    return std::exp(lv);
}

}  // namespace gasp
