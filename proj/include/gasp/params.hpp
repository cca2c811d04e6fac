#pragma once

#include <vector>

namespace gasp {

// Parameters of the operator
//   sum_i u_{x_i x_i} + sum_{k<=n} (2 alpha_k / x_k) u_{x_k}
// in m dimensions, together with the derived exponent alpha_tilde and the
// normalization gamma_n of the fundamental solution.
class EllipticParams {
public:
    EllipticParams(int m, std::vector<double> alpha);

    int m() const { return m_; }
    int n() const { return static_cast<int>(alpha_.size()); }
    const std::vector<double>& alpha() const { return alpha_; }
    double alpha(int k) const { return alpha_[k]; }
    double alpha_sum() const;
    double alpha_tilde() const { return alpha_tilde_; }
    double gamma_n() const { return gamma_n_; }

private:
    int m_;
    std::vector<double> alpha_;
    double alpha_tilde_;
    double gamma_n_;
};

// gamma_n computed from scratch (the constructor caches the same value).
double normalization(const EllipticParams& ep);

}  // namespace gasp
