#ifndef QEXPAND_SPECIAL_HPP
#define QEXPAND_SPECIAL_HPP

#include <cmath>

#include "complex.hpp"
#include "complex_series.hpp"
#include "errors.hpp"
#include "number_tables.hpp"

namespace qexpand
{

inline constexpr double li2_radius = 0.97;

// Li_2(w) = sum w^n/n^2 on |w| <= 0.97, plus the single boundary value Li_2(1) = pi^2/6.
inline BigComplex li2(const BigComplex &w)
{
    mpfr_prec_t bits = w.bits();
    if (w.im.is_zero() && w.re == Real(1)) {
        Real pi = real_pi(bits);
        return BigComplex(pi * pi / 6);
    }
    Real r = abs(w);
    double rd = r.to_double();
    if (rd > li2_radius) throw parameter_error("li2: |w| > 0.97 is outside the supported region");
    if (r.is_zero()) return BigComplex(Real(Real::bits_tag{}, bits));
    mpfr_prec_t wb = bits + 32;
    BigComplex x = w;
    x.re.set_bits(wb);
    x.im.set_bits(wb);
    BigComplex pw = x, sum = x;
    double lr = std::log(rd), tail = -static_cast<double>(bits + 4) * std::log(2.0) + std::log1p(-rd);
    for (long n = 2;; ++n) {
        pw *= x;
        BigComplex t = pw / (n * n);
        sum += t;
        if (static_cast<double>(n + 1) * lr - 2.0 * std::log(static_cast<double>(n + 1)) < tail) break;
    }
    sum.re.set_bits(bits);
    sum.im.set_bits(bits);
    return sum;
}

// Li_{-m}(w) = w A_m(w) / (1-w)^{m+1}
inline BigComplex polylog_neg(long m, const BigComplex &w)
{
    if (m < 0) throw parameter_error("polylog_neg: m must be >= 0");
    BigComplex one(Real(Real::bits_tag{}, w.bits()) + 1);
    BigComplex d = one - w;
    if (d.re.is_zero() && d.im.is_zero()) throw parameter_error("polylog_neg: pole at w = 1");
    IntPoly a = eulerian_poly(m);
    BigComplex h(Real(Real::bits_tag{}, w.bits()));
    for (size_t i = a.size(); i-- > 0;) h = h * w + BigComplex(Real(a[i]));
    return w * h / pow(d, m + 1);
}

// Series of Li_{-m}(W(z)) for a series W whose constant term is not 1.
inline ComplexSeries polylog_neg(long m, const ComplexSeries &w)
{
    IntPoly a = eulerian_poly(m);
    BigComplex zero(Real(Real::bits_tag{}, w.bits()));
    ComplexSeries h = ComplexSeries::constant(w.center(), zero, w.order());
    for (size_t i = a.size(); i-- > 0;) h = h * w + BigComplex(Real(a[i]));
    ComplexSeries d = BigComplex(zero + 1) - w;
    return w * h * pow(inv(d), m + 1);
}

// Cl_2(theta) = theta - theta log|theta| + theta sum_{n>=1} zeta(2n)/(n(2n+1)) (theta/2pi)^{2n}, |theta| <= pi.
inline Real clausen(const Real &theta)
{
    mpfr_prec_t bits = theta.bits();
    mpfr_prec_t wb = bits + 16;
    Real t = theta;
    t.set_bits(wb);
    Real twopi = real_pi(wb) * 2;
    Real pi = real_pi(wb);
    t = t - twopi * floor((t + pi) / twopi);
    if (t > pi) t -= twopi;
    if (t.is_zero()) return Real(Real::bits_tag{}, bits);
    Real x = t / twopi;
    Real x2 = x * x, xp = x2;
    Real s(Real::bits_tag{}, wb);
    Real eps = ldexp(Real(Real::bits_tag{}, wb) + 1, -static_cast<long>(wb));
    for (long n = 1;; ++n) {
        Real term = zeta_ui(static_cast<unsigned long>(2 * n), wb) * xp / (n * (2 * n + 1));
        s += term;
        if (abs(term) < eps) break;
        xp *= x2;
    }
    Real r = t - t * log(abs(t)) + t * s;
    r.set_bits(bits);
    return r;
}

// L_{3/2}(y) = sum_j y^j / (j! Gamma(j + 5/2)), entire in y.
inline Real bessel_L32(const Real &y)
{
    mpfr_prec_t bits = y.bits();
    mpfr_prec_t wb = bits + 32 + static_cast<mpfr_prec_t>(2.0 * std::fabs(y.to_double()));
    Real yy = y;
    yy.set_bits(wb);
    Real g = sqrt(real_pi(wb)) * 3 / 4; // Gamma(5/2)
    Real term = 1 / g, s = term;
    Real eps = ldexp(Real(Real::bits_tag{}, wb) + 1, -static_cast<long>(wb));
    for (long j = 1;; ++j) {
        term *= yy;
        term /= j;
        term *= 2;
        term /= 2 * j + 3; // Gamma(j + 5/2) = (j + 3/2) Gamma(j + 3/2)
        s += term;
        if (j > 2 * std::fabs(y.to_double()) + 2 && abs(term) < eps) break;
    }
    s.set_bits(bits);
    return s;
}

struct SaddleConstants {
    BigComplex w0;
    BigComplex z0;
    Real U;
    Real V;
    Real residual;
    long digits = 0;
    int iterations = 0;
};

// Newton on F(w) = Li_2(w) - 2 pi i log w from the seed 0.92 - 0.18i.
inline SaddleConstants find_w0(long digits)
{
    if (digits < 30) throw parameter_error("find_w0: precision must be >= 30 digits");
    precision_scope scope(digits + 10);
    mpfr_prec_t bits = working_bits();
    BigComplex two_pi_i(Real(Real::bits_tag{}, bits), real_pi(bits) * 2);
    BigComplex one(Real(Real::bits_tag{}, bits) + 1);
    BigComplex w(Real(std::string("0.92")), Real(std::string("-0.18")));
    Real tol = pow10(-(digits - 5), bits);
    SaddleConstants sc;
    bool done = false;
    for (int it = 1; it <= 200; ++it) {
        BigComplex F = li2(w) - two_pi_i * log(w);
        BigComplex dF = (-log(one - w) - two_pi_i) / w;
        BigComplex step = F / dF;
        w -= step;
        sc.iterations = it;
        if (abs(step) < tol) {
            done = true;
            break;
        }
    }
    if (!done) throw convergence_error("find_w0: Newton iteration did not converge");
    sc.w0 = w;
    sc.z0 = two_pi_i + log(one - w);
    sc.U = -log(abs(w));
    sc.V = arg(one / w);
    sc.residual = abs(li2(w) - two_pi_i * log(w));
    sc.digits = digits;
    return sc;
}

// Taylor data of p(z) = (Li_2(e^z) - Li_2(1))/z at z_c from z p' = -(p + log(1 - e^z)).
inline ComplexSeries p_series_at(const BigComplex &zc, size_t order)
{
    if (zc.re.sign() >= 0) throw parameter_error("p_series_at: Re(center) must be negative");
    mpfr_prec_t bits = zc.bits();
    BigComplex one(Real(Real::bits_tag{}, bits) + 1);
    ComplexSeries E = ComplexSeries::exp_linear(zc, one, order + 1);
    ComplexSeries L = log(one - E);
    std::vector<BigComplex> P(order, BigComplex(Real(Real::bits_tag{}, bits)));
    if (!order) return {zc, P};
    Real pi = real_pi(bits);
    P[0] = (li2(E[0]) - BigComplex(pi * pi / 6)) / zc;
    for (size_t n = 0; n + 1 < order; ++n)
        P[n + 1] = -((P[n] * static_cast<long>(n + 1) + L[n]) / (zc * static_cast<long>(n + 1)));
    return {zc, std::move(P)};
}

} // namespace qexpand

#endif
