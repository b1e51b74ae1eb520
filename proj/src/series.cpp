#include "spinh/series.hpp"
#include "spinh/error.hpp"

#include <algorithm>

namespace spinh {

namespace {

Rational factorial(long n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

void check_trunc(int trunc)
{
    if (trunc < 0 || trunc > 4096)
        throw DomainError(Errc::invalid_argument, "series truncation out of range");
}

void check_compatible(const GradedSeries& a, const GradedSeries& b)
{
    if (a.variable_degree() != b.variable_degree())
        throw DomainError(Errc::invalid_argument, "series variables have different degrees");
}

} // namespace

GradedSeries::GradedSeries(int variable_degree, int trunc) : deg_(variable_degree)
{
    check_trunc(trunc);
    if (variable_degree < 1)
        throw DomainError(Errc::invalid_argument, "variable degree must be positive");
    c_.assign(trunc + 1, Rational(0));
}

GradedSeries::GradedSeries(int variable_degree, std::vector<Rational> coeffs, int trunc)
    : GradedSeries(variable_degree, trunc)
{
    for (size_t k = 0; k < coeffs.size() && k < c_.size(); ++k)
        c_[k] = coeffs[k];
}

GradedSeries add(const GradedSeries& a, const GradedSeries& b)
{
    check_compatible(a, b);
    GradedSeries out(a.variable_degree(), std::min(a.trunc(), b.trunc()));
    for (int k = 0; k <= out.trunc(); ++k)
        out[k] = a[k] + b[k];
    return out;
}

GradedSeries scale(const GradedSeries& a, const Rational& c)
{
    GradedSeries out = a;
    for (int k = 0; k <= out.trunc(); ++k)
        out[k] *= c;
    return out;
}

GradedSeries mul(const GradedSeries& a, const GradedSeries& b)
{
    check_compatible(a, b);
    int t = std::min(a.trunc(), b.trunc());
    GradedSeries out(a.variable_degree(), t);
    for (int i = 0; i <= t; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= t; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

GradedSeries reciprocal(const GradedSeries& a)
{
    if (a[0] == 0)
        throw DomainError(Errc::non_unit, "reciprocal of a series with zero constant term");
    GradedSeries out(a.variable_degree(), a.trunc());
    Rational inv = 1 / a[0];
    out[0] = inv;
    for (int k = 1; k <= a.trunc(); ++k) {
        Rational s = 0;
        for (int i = 1; i <= k; ++i)
            s += a[i] * out[k - i];
        out[k] = -inv * s;
    }
    return out;
}

GradedSeries power(const GradedSeries& a, int e)
{
    if (e < 0)
        return power(reciprocal(a), -e);
    GradedSeries result(a.variable_degree(), a.trunc());
    result[0] = 1;
    GradedSeries base = a;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        e >>= 1;
        if (e)
            base = mul(base, base);
    }
    return result;
}

GradedSeries compose_even(const std::vector<Rational>& even_coeffs, const GradedSeries& g)
{
    GradedSeries out(g.variable_degree(), g.trunc());
    GradedSeries gk(g.variable_degree(), g.trunc());
    gk[0] = 1;
    for (size_t k = 0; k < even_coeffs.size(); ++k) {
        if (k > 0) {
            gk = mul(gk, g);
            if (g[0] == 0 && static_cast<int>(k) > g.trunc())
                break;
        }
        out = add(out, scale(gk, even_coeffs[k]));
    }
    return out;
}

GradedSeries rescale_variable(const GradedSeries& a, const Rational& c)
{
    GradedSeries out = a;
    Rational ck = 1;
    for (int k = 0; k <= a.trunc(); ++k) {
        out[k] *= ck;
        ck *= c;
    }
    return out;
}

GradedSeries a_hat_series(int trunc)
{
    // 2 sinh(x/2) / x = sum x^{2k} / (4^k (2k+1)!)
    GradedSeries d(2, trunc);
    Rational four_k = 1;
    for (int k = 0; 2 * k <= trunc; ++k) {
        d[2 * k] = 1 / (four_k * factorial(2 * k + 1));
        four_k *= 4;
    }
    return reciprocal(d);
}

GradedSeries cosh_sqrt_series(int trunc)
{
    GradedSeries c(4, trunc);
    Rational four_k = 1;
    for (int k = 0; k <= trunc; ++k) {
        c[k] = 2 / (four_k * factorial(2 * k));
        four_k *= 4;
    }
    return c;
}

GradedSeries sinh_ratio_series(int m, int trunc)
{
    GradedSeries num(2, trunc), den(2, trunc);
    Integer mp = m;
    for (int k = 0; 2 * k <= trunc; ++k) {
        Rational f = factorial(2 * k + 1);
        num[2 * k] = Rational(mp) / f;
        den[2 * k] = 1 / f;
        mp *= m * m;
    }
    return mul(num, reciprocal(den));
}

GenusResult genus_4manifold(long signature, long euler, int orientation_sign)
{
    if (orientation_sign != 1 && orientation_sign != -1)
        throw DomainError(Errc::invalid_argument, "orientation sign must be +1 or -1");
    GenusResult g;
    g.closed_form = make_rational(signature + orientation_sign * euler, 2);
    g.closed_form.canonicalize();

    // (2 + p1(L)/4 + ...)(1 - p1/24 + ...), p1(L) = p1 +- 2e, integrate the degree-4 part
    GradedSeries ch = cosh_sqrt_series(1);
    GradedSeries ahat = a_hat_series(2);
    Rational int_p1 = 3 * signature;
    Rational int_e = euler;
    Rational int_pl = int_p1 + 2 * orientation_sign * int_e;
    g.via_series = ch[1] * int_pl + ch[0] * ahat[2] * int_p1;
    return g;
}

Integer hp_pairing_binomial(long i, long j)
{
    if (i < 0 || j < 0)
        throw DomainError(Errc::invalid_argument, "hp pairing indices must be >= 0");
    return binomial(i + j + 1, i - j);
}

Integer hp_pairing_residue(long i, long j)
{
    if (i < 0 || j < 0 || i > 2000 || j > 2000)
        throw DomainError(Errc::invalid_argument, "hp pairing indices out of range");
    int t = static_cast<int>(2 * j);
    GradedSeries f = a_hat_series(t);
    GradedSeries ahat_hp = mul(power(f, static_cast<int>(2 * j + 2)), reciprocal(rescale_variable(f, 2)));
    GradedSeries integrand = mul(sinh_ratio_series(static_cast<int>(i + 1), t), ahat_hp);
    Rational c = integrand[t];
    if (!is_integer(c))
        throw DomainError(Errc::non_integral, "residue extraction gave a non-integer " + c.get_str());
    return c.get_num();
}

GradedSeries chebyshev_theta(int i, int trunc)
{
    if (i < 0)
        throw DomainError(Errc::invalid_argument, "chebyshev index must be >= 0");
    GradedSeries z(2, trunc);
    z[0] = 1;
    if (trunc >= 2)
        z[2] = Rational(1, 2);
    GradedSeries prev(2, trunc), cur(2, trunc);
    prev[0] = 1;                 // U_0
    if (i == 0)
        return prev;
    cur = scale(z, 2);           // U_1
    for (int k = 1; k < i; ++k) {
        GradedSeries next = add(scale(mul(z, cur), 2), scale(prev, -1));
        prev = cur;
        cur = next;
    }
    return cur;
}

GradedSeries WeakThomFactor::single_root() const
{
    return scale(root_factor, sign * p_factor[0]);
}

WeakThomFactor weak_thom_chern_character(int n, int trunc)
{
    if (n < 0)
        throw DomainError(Errc::invalid_argument, "half-rank must be >= 0");
    WeakThomFactor w{(n % 2) ? -1 : 1, cosh_sqrt_series(trunc / 2), reciprocal(a_hat_series(trunc))};
    return w;
}

} // namespace spinh
