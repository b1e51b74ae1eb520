#pragma once

#include "spinh/rational.hpp"

#include <vector>

namespace spinh {

// Truncated power series sum_{k <= trunc} c_k t^k, t of cohomological degree variable_degree.
class GradedSeries {
public:
    GradedSeries(int variable_degree, int trunc);
    GradedSeries(int variable_degree, std::vector<Rational> coeffs, int trunc);

    int variable_degree() const { return deg_; }
    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](int k) const { return c_.at(k); }
    Rational& operator[](int k) { return c_.at(k); }
    Rational coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }

    bool operator==(const GradedSeries& o) const { return deg_ == o.deg_ && c_ == o.c_; }

private:
    int deg_;
    std::vector<Rational> c_;
};

GradedSeries add(const GradedSeries& a, const GradedSeries& b);
GradedSeries mul(const GradedSeries& a, const GradedSeries& b);
GradedSeries scale(const GradedSeries& a, const Rational& c);
GradedSeries reciprocal(const GradedSeries& a);
GradedSeries power(const GradedSeries& a, int e);
// f(t) = sum f_k t^{2k} (even function given by f_k), evaluated at t^2 = g.
GradedSeries compose_even(const std::vector<Rational>& even_coeffs, const GradedSeries& g);
// a(t) -> a(c t)
GradedSeries rescale_variable(const GradedSeries& a, const Rational& c);

// x / (2 sinh(x/2)) in one Chern root x (degree 2).
GradedSeries a_hat_series(int trunc);
// 2 cosh(sqrt(p)/2) in a degree-4 variable p.
GradedSeries cosh_sqrt_series(int trunc);
// sinh(m x) / sinh(x) in x.
GradedSeries sinh_ratio_series(int m, int trunc);

struct GenusResult {
    Rational closed_form;
    Rational via_series;
    bool agree() const { return closed_form == via_series; }
};

// Genus of a 4-manifold: (signature +- euler)/2, both by formula and by the series product.
GenusResult genus_4manifold(long signature, long euler, int orientation_sign);

Integer hp_pairing_binomial(long i, long j);
Integer hp_pairing_residue(long i, long j);
// Theta_i(y) = U_i(1 + y^2/2) as a series in y (degree 2 variable).
GradedSeries chebyshev_theta(int i, int trunc);

struct WeakThomFactor {
    int sign = 1;              // (-1)^n
    GradedSeries p_factor;     // 2 cosh(sqrt(p)/2) in the p1(h) variable
    GradedSeries root_factor;  // per-root inverse A-hat factor in x
    // Combined series in one root x with p1(h) = 0.
    GradedSeries single_root() const;
};

WeakThomFactor weak_thom_chern_character(int n, int trunc);

} // namespace spinh
