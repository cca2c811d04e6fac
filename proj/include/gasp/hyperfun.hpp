#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gasp/params.hpp"

// Gamma machinery, the Gauss function 2F1 and the Lauricella function F_A.
// Axis arguments are 0-based, except in index_maps, which keeps the 1-based
// labels of the index table.

namespace gasp {

struct SeriesControl {
    double rel_tol = 1e-10;
    long max_terms_per_axis = 5000;
    long max_total_terms = 2000000;

    void validate() const;
};

struct EvalResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long terms_used = 0;
    bool converged = true;
};

struct GaussParams {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    double x = 0.0;
};

struct LauricellaParams {
    double a = 0.0;
    std::vector<double> b;
    std::vector<double> c;

    std::size_t n() const { return b.size(); }
    void validate() const;
};

// Upper-triangular table m_{i,j}, 2 <= i <= j <= n, stored row by row:
// (2,2), (2,3), ..., (2,n), (3,3), ..., (n,n).
class IndexAssignment {
public:
    explicit IndexAssignment(int n);

    int n() const { return n_; }
    std::size_t size() const { return values_.size(); }
    int& operator()(int i, int j) { return values_[offset(i, j)]; }
    int operator()(int i, int j) const { return values_[offset(i, j)]; }
    std::vector<int>& values() { return values_; }
    const std::vector<int>& values() const { return values_; }
    // (i, j) labels of the entry stored at position e.
    std::pair<int, int> label(std::size_t e) const;
    int degree() const;

    static std::size_t entry_count(int n);

private:
    std::size_t offset(int i, int j) const;
    int n_;
    std::vector<int> values_;
};

double log_gamma(double x);
double pochhammer(double a, long k);

// Returns (M(k,n), N(k,n)) for 1 <= k <= n.
std::pair<int, int> index_maps(const IndexAssignment& asg, int k, int n);

// F(a,b;c;x) = prefactor * F(p') with p' at argument x/(x-1).
// keep_a selects (1-x)^{-a} F(a, c-b; c; w), otherwise (1-x)^{-b} F(c-a, b; c; w).
struct PfaffForm {
    double prefactor;
    GaussParams params;
};
PfaffForm pfaff_transform(const GaussParams& p, bool keep_a);

EvalResult gauss_2f1(const GaussParams& p, const SeriesControl& ctl = {});

EvalResult lauricella_fa_direct(const LauricellaParams& p, const std::vector<double>& z,
                                const SeriesControl& ctl = {});
EvalResult lauricella_fa_decomposed(const LauricellaParams& p, const std::vector<double>& z,
                                    const SeriesControl& ctl = {});

EvalResult fa_partial_derivative(const LauricellaParams& p, const std::vector<double>& z, int j,
                                 const SeriesControl& ctl = {});
double adjacent_relation_residual(const LauricellaParams& p, const std::vector<double>& z,
                                  const SeriesControl& ctl = {});

struct AlephLimit {
    EvalResult series;
    double closed_form;
};
AlephLimit aleph_limit(const EllipticParams& ep, const SeriesControl& ctl = {});

// Surface area of the unit sphere in R^m.
double surface_constant(int m);

namespace detail {

// log|Gamma(x)| and its sign for any real x that is not a pole.
double log_abs_gamma(double x, int* sign);

// z^M F(A,B;C;z) for z < 1, summed with a scale-tracked accumulator so that
// large M and A neither overflow nor underflow. Negative z goes through the
// Pfaff transformation.
EvalResult gauss_power_term(double A, double B, double C, double z, long M, long max_terms,
                            double rel_tol);

// The same quantity as mant * 2^exp2, for callers that multiply several such
// factors whose individual sizes leave the double range.
struct ScaledValue {
    double mant = 0.0;
    long exp2 = 0;
    double err_mant = 0.0;  // error estimate on the same scale
    long terms_used = 0;
    bool converged = true;
};
ScaledValue gauss_power_term_scaled(double A, double B, double C, double z, long M, long max_terms,
                                    double rel_tol);

}  // namespace detail

}  // namespace gasp
