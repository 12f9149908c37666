#ifndef QEXPAND_SADDLE_HPP
#define QEXPAND_SADDLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "complex_series.hpp"
#include "errors.hpp"
#include "number_tables.hpp"
#include "rational.hpp"
#include "special.hpp"

namespace qexpand
{

inline BigComplex czero(mpfr_prec_t bits = working_bits()) { return BigComplex(Real(Real::bits_tag{}, bits)); }
inline BigComplex cone(mpfr_prec_t bits = working_bits()) { return czero(bits) + 1; }
inline BigComplex to_complex(const Rational &q, mpfr_prec_t bits = working_bits())
{
    Real r(Real::bits_tag{}, bits);
    mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
    return BigComplex(r);
}

// B^_{i,j}(p_1, p_2, ...): coefficient of x^i in (p_1 x + p_2 x^2 + ...)^j. p[0] holds p_1.
inline BigComplex bell_partial(long i, long j, const std::vector<BigComplex> &p)
{
    if (j < 0 || i < j) throw parameter_error("bell_partial: need 0 <= j <= i");
    mpfr_prec_t bits = p.empty() ? working_bits() : p[0].bits();
    size_t n = static_cast<size_t>(i) + 1;
    std::vector<BigComplex> x(n, czero(bits)), r(n, czero(bits));
    for (size_t s = 1; s < n && s - 1 < p.size(); ++s) x[s] = p[s - 1];
    r[0] = cone(bits);
    for (long t = 0; t < j; ++t) {
        std::vector<BigComplex> nr(n, czero(bits));
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 1; a + b < n; ++b) nr[a + b] += r[a] * x[b];
        r = std::move(nr);
    }
    return r[static_cast<size_t>(i)];
}

// alpha_n(p, q; z0) for a saddle of order mu, from p_0 and p_1.. (p[0] = p_0) and q_0..
inline BigComplex alpha_n_generic(const std::vector<BigComplex> &p, const std::vector<BigComplex> &q, long n, long mu)
{
    if (p.empty() || (p[0].re.is_zero() && p[0].im.is_zero())) throw parameter_error("alpha_n: p_0 = 0");
    if (static_cast<long>(q.size()) <= n || static_cast<long>(p.size()) <= n)
        throw parameter_error("alpha_n: series too short");
    mpfr_prec_t bits = p[0].bits();
    std::vector<BigComplex> ratio;
    for (long s = 1; s <= n; ++s) ratio.push_back(p[static_cast<size_t>(s)] / p[0]);
    Rational tau(-(n + 1), mu);
    BigComplex sum = czero(bits);
    for (long i = 0; i <= n; ++i) {
        BigComplex inner = czero(bits);
        for (long j = 0; j <= i; ++j) {
            BigComplex b = bell_partial(i, j, ratio);
            inner += b * to_complex(binomial(tau, j), bits);
        }
        sum += q[static_cast<size_t>(n - i)] * inner;
    }
    return pow(p[0], to_complex(tau, bits)) * sum / mu;
}

// Gamma(s + 1/2) from sqrt(pi) by the recurrence.
inline Real gamma_half(long s, mpfr_prec_t bits = working_bits())
{
    Real g = sqrt(real_pi(bits));
    for (long i = 0; i < s; ++i) g = g * (2 * i + 1) / 2;
    return g;
}

// Everything that depends only on k and the precision: saddle data of r_k(z) = p(kz)/k at z0/k
// and the Perron weights for mu = 2.
struct SaddleContext {
    long k = 1;
    long digits = 60;
    mpfr_prec_t bits = 0;
    int mu = 2;
    size_t order = 0;
    SaddleConstants constants;
    BigComplex center;
    std::vector<BigComplex> r_taylor;  // Taylor coefficients of r_k at z0/k
    std::vector<BigComplex> p_coeffs;  // p_s with r_k(z) - r_k(z0/k) = -sum p_s (z - z0/k)^{s+2}
    std::vector<std::vector<BigComplex>> weight; // alpha_n = sum_i q_{n-i} weight[n][i]
    BigComplex log_w0;
};

// Taylor series of r_k at z0/k from z r' = -(r + log(1 - e^{kz})/k), independent of the k = 1 data.
inline ComplexSeries r_series_at(long k, const SaddleConstants &sc, size_t order)
{
    mpfr_prec_t bits = working_bits();
    BigComplex c = sc.z0 / k;
    ComplexSeries L = log(cone(bits) - ComplexSeries::exp_linear(c, BigComplex(Real(k)), order + 1));
    std::vector<BigComplex> R(order, czero(bits));
    Real pi = real_pi(bits);
    R[0] = (li2(exp(sc.z0)) - BigComplex(pi * pi / 6)) / sc.z0 / k;
    for (size_t n = 0; n + 1 < order; ++n)
        R[n + 1] = -((R[n] * static_cast<long>(n + 1) + L[n] / k) / (c * static_cast<long>(n + 1)));
    return {c, std::move(R)};
}

inline SaddleContext make_context(long k, long digits, size_t order)
{
    if (k < 1) throw parameter_error("k must be >= 1");
    if (order < 6) order = 6;
    SaddleContext ctx;
    ctx.k = k;
    ctx.digits = digits;
    ctx.constants = find_w0(digits);
    precision_scope scope(digits + 10);
    ctx.bits = working_bits();
    ctx.order = order;
    ctx.center = ctx.constants.z0 / k;
    ctx.log_w0 = log(ctx.constants.w0);
    ComplexSeries r = r_series_at(k, ctx.constants, order);
    ctx.r_taylor = r.coeffs();
    if (abs(ctx.r_taylor[1]).log10_abs() > -(digits - 10))
        throw convergence_error("saddle context: r_k'(z0/k) is not zero to working precision");
    for (size_t s = 0; s + 2 < order; ++s) ctx.p_coeffs.push_back(-ctx.r_taylor[s + 2]);
    size_t nmax = ctx.p_coeffs.size() - 1;
    std::vector<BigComplex> ratio;
    for (size_t s = 1; s <= nmax; ++s) ratio.push_back(ctx.p_coeffs[s] / ctx.p_coeffs[0]);
    // bell[i][j] by repeated multiplication of X = sum ratio_s x^s
    std::vector<std::vector<BigComplex>> bell(nmax + 1, std::vector<BigComplex>(nmax + 1, czero()));
    std::vector<BigComplex> pw(nmax + 1, czero());
    pw[0] = cone();
    for (size_t j = 0; j <= nmax; ++j) {
        for (size_t i = 0; i <= nmax; ++i) bell[i][j] = pw[i];
        std::vector<BigComplex> nx(nmax + 1, czero());
        for (size_t a = 0; a <= nmax; ++a)
            for (size_t b = 1; a + b <= nmax; ++b) nx[a + b] += pw[a] * ratio[b - 1];
        pw = std::move(nx);
    }
    BigComplex lp0 = log(ctx.p_coeffs[0]);
    ctx.weight.assign(nmax + 1, {});
    for (size_t n = 0; n <= nmax; ++n) {
        Rational tau(-static_cast<long>(n + 1), 2);
        BigComplex pre = exp(to_complex(tau) * lp0) / 2;
        for (size_t i = 0; i <= n; ++i) {
            BigComplex w = czero();
            for (size_t j = 0; j <= i; ++j) w += bell[i][j] * to_complex(binomial(tau, static_cast<long>(j)));
            ctx.weight[n].push_back(pre * w);
        }
    }
    return ctx;
}

inline BigComplex alpha_n(const SaddleContext &ctx, const ComplexSeries &q, long n)
{
    if (ctx.mu != 2) throw parameter_error("alpha_n: pipelines require mu = 2");
    if (n < 0 || n >= static_cast<long>(ctx.weight.size()) || static_cast<long>(q.order()) <= n)
        throw parameter_error("alpha_n: order too small");
    BigComplex s = czero(ctx.bits);
    for (long i = 0; i <= n; ++i) s += q[static_cast<size_t>(n - i)] * ctx.weight[static_cast<size_t>(n)][static_cast<size_t>(i)];
    return s;
}

// rho^{-j} for rho = e^{2 pi i h/k}
inline BigComplex rho_pow(long k, long h, long j) { return root_of_unity(mod(-h * j, k), k); }

inline void check_center(const BigComplex &c)
{
    if (c.re.sign() >= 0) throw parameter_error("series center must have negative real part");
}

// g_rho(z) = (-z/(2 pi (1 - e^z)))^{1/2} prod_{j=1}^{k-1} ((1 - rho^{-j} e^z)/(1 - rho^{-j}))^{j/k - 1/2}
inline ComplexSeries g_rho_series(long k, long h, const BigComplex &center, size_t order)
{
    check_center(center);
    mpfr_prec_t bits = working_bits();
    ComplexSeries Z = ComplexSeries::identity(center, order);
    ComplexSeries E = ComplexSeries::exp_linear(center, cone(bits), order);
    ComplexSeries base = (-Z) * inv(cone(bits) - E) * BigComplex(1 / (real_pi(bits) * 2));
    ComplexSeries g = pow(base, to_complex(Rational(1, 2)));
    for (long j = 1; j < k; ++j) {
        Rational ex = Rational(j, k) - Rational(1, 2);
        if (ex == 0) continue;
        BigComplex rj = rho_pow(k, h, j);
        ComplexSeries fac = (cone(bits) - E * rj) * BigComplex(cone(bits) / (cone(bits) - rj));
        g *= pow(fac, to_complex(ex));
    }
    return g;
}

// f_{rho,l}(z) built from negative-order polylogarithms at rho^{-j} e^z.
inline ComplexSeries f_rho_series(long k, long h, long ell, const BigComplex &center, size_t order)
{
    check_center(center);
    if (ell < 1) throw parameter_error("f_rho_series: ell must be >= 1");
    mpfr_prec_t bits = working_bits();
    ComplexSeries Z = ComplexSeries::identity(center, order);
    ComplexSeries E = ComplexSeries::exp_linear(center, cone(bits), order);
    long m = ell - 1;
    ComplexSeries inner = polylog_neg(m, E) * to_complex(bernoulli(ell + 1));
    if (ell == 1) inner += to_complex(Rational(1, 12));
    for (long j = 1; j < k; ++j) {
        Rational b = bernoulli_poly(ell + 1, Rational(j, k));
        if (b == 0) continue;
        BigComplex rj = rho_pow(k, h, j);
        ComplexSeries t = polylog_neg(m, E * rj) - polylog_neg(m, rj);
        inner += t * to_complex(b);
    }
    Rational pre(1, factorial(static_cast<unsigned long>(ell + 1)));
    if (ell % 2 == 0) pre = -pre;
    ComplexSeries kz = Z * BigComplex(Real(k));
    return pow(kz, ell) * inner * to_complex(pre);
}

// u_{rho,j} (wave = false, linear term z + f_1) or omega_{rho,j} (wave = true, f_1 alone), j <= jmax.
inline std::vector<ComplexSeries> u_series(long k, long h, const BigComplex &center, size_t order, long jmax, bool wave)
{
    std::vector<ComplexSeries> f;
    for (long l = 1; l <= jmax; ++l) f.push_back(f_rho_series(k, h, l, center, order));
    if (!wave && jmax >= 1) f[0] += ComplexSeries::identity(center, order);
    std::vector<ComplexSeries> U{ComplexSeries::constant(center, cone(), order)};
    for (long j = 1; j <= jmax; ++j) {
        ComplexSeries acc = ComplexSeries::constant(center, czero(), order);
        for (long l = 1; l <= j; ++l) acc += f[static_cast<size_t>(l - 1)] * U[static_cast<size_t>(j - l)] * BigComplex(Real(l));
        U.push_back(acc * BigComplex(Real(1) / j));
    }
    return U;
}

// gamma_{rho,m,j} = sum_r B_r^{(m+1)} z^{r-m-1}/r! u_{rho,j-r}
inline std::vector<ComplexSeries> gamma_series(long m, const std::vector<ComplexSeries> &u)
{
    const BigComplex &c = u[0].center();
    size_t order = u[0].order();
    ComplexSeries Z = ComplexSeries::identity(c, order);
    std::vector<ComplexSeries> G;
    for (size_t j = 0; j < u.size(); ++j) {
        ComplexSeries acc = ComplexSeries::constant(c, czero(), order);
        for (size_t r = 0; r <= j; ++r) {
            Rational coef = norlund(static_cast<long>(r), m + 1) / Rational(factorial(r));
            if (coef == 0) continue;
            acc += pow(Z, static_cast<long>(r) - m - 1) * u[j - r] * to_complex(coef);
        }
        G.push_back(std::move(acc));
    }
    return G;
}

// phi_{rho,n}(z,v) from prod_{r<v} sum_j kappa_j(z,r) w^j; with lambda != 0 the wave factor
// e^{lambda v z w} is folded in.
inline std::vector<ComplexSeries> phi_series(long k, long h, long v, const BigComplex &center, size_t order, long jmax,
                                             const Rational &lambda = Rational(0))
{
    ComplexSeries Z = ComplexSeries::identity(center, order);
    ComplexSeries E = ComplexSeries::exp_linear(center, cone(), order);
    ComplexSeries zero = ComplexSeries::constant(center, czero(), order);
    std::vector<ComplexSeries> P(static_cast<size_t>(jmax) + 1, zero);
    P[0] = ComplexSeries::constant(center, cone(), order);
    for (long r = 0; r < v; ++r) {
        ComplexSeries base = E * rho_pow(k, h, r);
        std::vector<ComplexSeries> kap;
        ComplexSeries mrz = Z * BigComplex(Real(-r));
        ComplexSeries pw = ComplexSeries::constant(center, cone(), order);
        for (long j = 0; j <= jmax; ++j) {
            ComplexSeries t = -(base * pw) * BigComplex(Real(1) / Real(factorial(static_cast<unsigned long>(j))));
            if (j == 0) t += cone();
            kap.push_back(std::move(t));
            pw *= mrz;
        }
        std::vector<ComplexSeries> nP(P.size(), zero);
        for (long a = 0; a <= jmax; ++a)
            for (long b = 0; a + b <= jmax; ++b) nP[static_cast<size_t>(a + b)] += P[static_cast<size_t>(a)] * kap[static_cast<size_t>(b)];
        P = std::move(nP);
    }
    if (lambda != 0 && v != 0) {
        ComplexSeries lz = Z * to_complex(Rational(lambda * v));
        std::vector<ComplexSeries> ex{ComplexSeries::constant(center, cone(), order)};
        for (long j = 1; j <= jmax; ++j) ex.push_back(ex.back() * lz * BigComplex(Real(1) / j));
        std::vector<ComplexSeries> nP(P.size(), zero);
        for (long n = 0; n <= jmax; ++n)
            for (long j = 0; j <= n; ++j) nP[static_cast<size_t>(n)] += ex[static_cast<size_t>(j)] * P[static_cast<size_t>(n - j)];
        P = std::move(nP);
    }
    return P;
}

inline std::vector<ComplexSeries> star_series(const std::vector<ComplexSeries> &a, const std::vector<ComplexSeries> &phi)
{
    std::vector<ComplexSeries> out;
    for (size_t j = 0; j < a.size(); ++j) {
        ComplexSeries acc = ComplexSeries::constant(a[0].center(), czero(), a[0].order());
        for (size_t n = 0; n <= j; ++n) acc += a[n] * phi[j - n];
        out.push_back(std::move(acc));
    }
    return out;
}

inline ComplexSeries gamma_star_series(long k, long h, long m, long j, long v, const BigComplex &center, size_t order)
{
    auto u = u_series(k, h, center, order, j, false);
    auto G = gamma_series(m, u);
    auto phi = phi_series(k, h, v, center, order, j);
    return star_series(G, phi)[static_cast<size_t>(j)];
}

enum class CoeffKind { c, d, e, a };

struct AsymCoeffSet {
    CoeffKind kind = CoeffKind::e;
    long k = 1;
    long h = 0;
    long m = 0;
    Rational lambda = 0;
    long Nk = 0;
    long nk = 0;
    std::vector<BigComplex> coeffs;
};

inline size_t series_order_for(long r) { return static_cast<size_t>(2 * r + 6); }

inline void require_order(const SaddleContext &ctx, long r)
{
    if (r < 1) throw parameter_error("r must be >= 1");
    if (ctx.order < series_order_for(r)) throw parameter_error("saddle context order too small for r");
}

// Rebase from powers of N' = M + v to powers of M: out_j = w0^{-v/k} sum_n v^{j-n} binom(top - n, j - n) in_n.
inline std::vector<BigComplex> rebase(const SaddleContext &ctx, const std::vector<BigComplex> &in, long v, long top)
{
    BigComplex f = exp(ctx.log_w0 * to_complex(Rational(-v, ctx.k)));
    std::vector<BigComplex> out;
    for (size_t j = 0; j < in.size(); ++j) {
        BigComplex s = czero();
        for (size_t n = 0; n <= j; ++n) {
            Integer c = binomial(top - static_cast<long>(n), static_cast<long>(j - n));
            Integer vp;
            mpz_ui_pow_ui(vp.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(j - n));
            s += in[n] * BigComplex(Real(Integer(c * vp)));
        }
        out.push_back(f * s);
    }
    return out;
}

// Closed forms for the j = 0 coefficients.
inline BigComplex e0_closed_form(const SaddleContext &ctx, long h, long m, long Nk)
{
    precision_scope scope(ctx.digits + 10);
    long k = ctx.k;
    const BigComplex &z0 = ctx.constants.z0, &w0 = ctx.constants.w0;
    BigComplex ezk = exp(z0 / k);
    BigComplex two_pi_i(czero().re, real_pi() * 2);
    BigComplex half = to_complex(Rational(1, 2));
    BigComplex r = -z0 / (two_pi_i * exp(z0 / 2));
    r *= pow(w0 / k, half) / pow(cone() - ezk, half);
    for (long j = 1; j < k; ++j) {
        Rational ex = Rational(j, k) - Rational(1, 2);
        BigComplex rj = rho_pow(k, h, j);
        r *= pow((cone() - rj * ezk) / (cone() - rj), to_complex(ex));
    }
    r *= rho_pow(k, h, m) * pow(z0 / k, -m - 1);
    r *= exp(ctx.log_w0 * to_complex(Rational(Nk, k)));
    for (long j = 1; j <= Nk; ++j) r /= cone() - rho_pow(k, h, -j) * ezk;
    return r;
}

// Tail factor F(v) = w0^{-v/k} prod_{j<v} (1 - rho^{-j} e^{z0/k}) for any v >= 0.
inline BigComplex tail_factor(const SaddleContext &ctx, long h, long v)
{
    precision_scope scope(ctx.digits + 10);
    BigComplex ezk = exp(ctx.constants.z0 / ctx.k);
    BigComplex r = exp(ctx.log_w0 * to_complex(Rational(-v, ctx.k)));
    for (long j = 0; j < v; ++j) r *= cone() - rho_pow(ctx.k, h, j) * ezk;
    return r;
}

inline BigComplex a0_closed_form(const SaddleContext &ctx, const Rational &lambda, long Nk, long nk)
{
    precision_scope scope(ctx.digits + 10);
    long k = ctx.k;
    const BigComplex &z0 = ctx.constants.z0, &w0 = ctx.constants.w0;
    BigComplex ezk = exp(z0 / k);
    BigComplex half = to_complex(Rational(1, 2));
    BigComplex pi_i(czero().re, real_pi());
    BigComplex pre = z0 / pi_i * exp(-(z0 * to_complex(lambda / k + Rational(1, 2))));
    pre *= pow(w0 / k, half) / pow(cone() - ezk, half);
    BigComplex sum = czero();
    for (long h : units_mod(k)) {
        BigComplex t = rho_pow(k, h, nk);
        for (long j = 1; j < k; ++j) {
            BigComplex rj = rho_pow(k, h, j);
            t *= pow((cone() - rj * ezk) / (cone() - rj), to_complex(Rational(j, k) - Rational(1, 2)));
        }
        t *= exp(ctx.log_w0 * to_complex(Rational(Nk, k)));
        for (long j = 1; j <= Nk; ++j) t /= cone() - rho_pow(k, h, -j) * ezk;
        sum += t;
    }
    return pre * sum;
}

inline BigComplex c_m0_closed_form(const SaddleContext &ctx, long m)
{
    precision_scope scope(ctx.digits + 10);
    const BigComplex &z0 = ctx.constants.z0;
    BigComplex pi_i(czero().re, real_pi());
    return -(cone() / (pi_i * pow(z0, m) * exp(z0 / 2)));
}

inline BigComplex c_m1_closed_form(const SaddleContext &ctx, long m)
{
    precision_scope scope(ctx.digits + 10);
    const BigComplex &z0 = ctx.constants.z0, &w0 = ctx.constants.w0;
    BigComplex two_pi_i(czero().re, real_pi() * 2);
    BigComplex brace = BigComplex(Real(m - 1)) / exp(z0 / 2) +
                       w0 / exp(z0 * to_complex(Rational(3, 2))) *
                           (to_complex(Rational(1, 6)) + BigComplex(Real(m - 1)) / z0 +
                            BigComplex(Real(m * (m - 1))) / (z0 * z0));
    return brace / (two_pi_i * pow(z0, m - 1));
}

inline BigComplex d_m0_closed_form(const SaddleContext &ctx, long m, long N2)
{
    precision_scope scope(ctx.digits + 10);
    const BigComplex &z0 = ctx.constants.z0;
    BigComplex pi_i(czero().re, real_pi());
    BigComplex ez2 = exp(z0 / 2);
    BigComplex par = N2 % 2 ? cone() - ez2 : cone() + ez2;
    return -(BigComplex(sqrt(Real(2))) / pi_i) * pow(BigComplex(Real(-2)) / z0, m) * (cone() / ez2) *
           pow(par, to_complex(Rational(1, 2)));
}

namespace detail
{
inline void validate_main(const BigComplex &pipeline, const BigComplex &closed, long digits, const char *what)
{
    Real scale = abs(closed);
    Real diff = abs(pipeline - closed);
    if (diff.log10_abs() - scale.log10_abs() > -(digits / 2.0))
        throw branch_error(std::string(what) + ": main coefficient disagrees with its closed form (branch mismatch)");
}
} // namespace detail

// e_{m,j}(rho, N_k) for j < r, rho = e^{2 pi i h/k}.
inline AsymCoeffSet e_coeffs(const SaddleContext &ctx, long h, long m, long Nk, long r)
{
    require_order(ctx, r);
    long k = ctx.k;
    validate_root(k, h);
    if (Nk < 0 || Nk >= k) throw parameter_error("N_k must be in [0, k)");
    precision_scope scope(ctx.digits + 10);
    size_t order = ctx.order;
    long J = r - 1;
    long v = mod(k - Nk, k);
    const BigComplex &c = ctx.center;
    ComplexSeries g = g_rho_series(k, h, c, order);
    auto u = u_series(k, h, c, order, J, false);
    auto G = gamma_series(m, u);
    auto phi = phi_series(k, h, v, c, order, J);
    auto Gs = star_series(G, phi);
    BigComplex pi_i(czero().re, real_pi());
    BigComplex pre = -(BigComplex(sqrt(Real(k))) * rho_pow(k, h, m) / pi_i);
    std::vector<ComplexSeries> q;
    for (auto &s : Gs) q.push_back(g * s);
    std::vector<BigComplex> estar;
    for (long j = 0; j <= J; ++j) {
        BigComplex s = czero();
        for (long t = 0; t <= j; ++t) s += BigComplex(gamma_half(t)) * alpha_n(ctx, q[static_cast<size_t>(j - t)], 2 * t);
        estar.push_back(pre * s);
    }
    AsymCoeffSet out;
    out.kind = CoeffKind::e;
    out.k = k;
    out.h = mod(h, k);
    out.m = m;
    out.Nk = Nk;
    out.coeffs = rebase(ctx, estar, v, m - 1);
    detail::validate_main(out.coeffs[0], e0_closed_form(ctx, h, m, Nk), ctx.digits, "e_coeffs");
    return out;
}

inline AsymCoeffSet c_coeffs(const SaddleContext &ctx, long m, long r)
{
    if (ctx.k != 1) throw parameter_error("c_coeffs needs a k = 1 context");
    AsymCoeffSet s = e_coeffs(ctx, 0, m, 0, r);
    for (auto &x : s.coeffs) x *= 2L;
    s.kind = CoeffKind::c;
    return s;
}

inline AsymCoeffSet d_coeffs(const SaddleContext &ctx, long m, long N2, long r)
{
    if (ctx.k != 2) throw parameter_error("d_coeffs needs a k = 2 context");
    if (N2 != 0 && N2 != 1) throw parameter_error("N_2 must be 0 or 1");
    AsymCoeffSet s = e_coeffs(ctx, 1, m, N2, r);
    for (auto &x : s.coeffs) x *= 2L;
    s.kind = CoeffKind::d;
    return s;
}

// a_{lambda,j}(N_k, n_k) for j < r.
inline AsymCoeffSet wave_coeffs(const SaddleContext &ctx, const Rational &lambda, long Nk, long nk, long r)
{
    require_order(ctx, r);
    long k = ctx.k;
    if (Nk < 0 || Nk >= k || nk < 0 || nk >= k) throw parameter_error("N_k, n_k must be in [0, k)");
    precision_scope scope(ctx.digits + 10);
    size_t order = ctx.order;
    long J = r - 1;
    long v = mod(k - Nk, k);
    const BigComplex &c = ctx.center;
    std::vector<BigComplex> astar(static_cast<size_t>(J) + 1, czero());
    ComplexSeries elz = ComplexSeries::exp_linear(c, -to_complex(lambda), order);
    for (long h : units_mod(k)) {
        ComplexSeries g = elz * g_rho_series(k, h, c, order);
        auto w = u_series(k, h, c, order, J, true);
        auto phi = phi_series(k, h, v, c, order, J, lambda);
        auto ws = star_series(w, phi);
        BigComplex xn = rho_pow(k, h, nk);
        std::vector<ComplexSeries> q;
        for (auto &s : ws) q.push_back(g * s);
        for (long j = 0; j <= J; ++j) {
            BigComplex s = czero();
            for (long t = 0; t <= j; ++t) s += BigComplex(gamma_half(t)) * alpha_n(ctx, q[static_cast<size_t>(j - t)], 2 * t);
            astar[static_cast<size_t>(j)] += xn * s;
        }
    }
    BigComplex pi_i(czero().re, real_pi());
    BigComplex pre = BigComplex(sqrt(Real(k)) * 2) / pi_i;
    for (auto &x : astar) x *= pre;
    AsymCoeffSet out;
    out.kind = CoeffKind::a;
    out.k = k;
    out.lambda = lambda;
    out.Nk = Nk;
    out.nk = nk;
    out.coeffs = rebase(ctx, astar, v, -2);
    detail::validate_main(out.coeffs[0], a0_closed_form(ctx, lambda, Nk, nk), ctx.digits, "wave_coeffs");
    return out;
}

// A_m(e^{2 pi i h/k}, N) from the first r terms of the expansion (both conjugate families).
inline BigComplex eval_asym_A(const SaddleContext &ctx, long h, long m, long N, long r)
{
    if (N < 1) throw parameter_error("N must be >= 1");
    long k = ctx.k;
    long Nk = N % k;
    AsymCoeffSet e1 = e_coeffs(ctx, h, m, Nk, r);
    AsymCoeffSet e2 = e_coeffs(ctx, -h, m, Nk, r);
    precision_scope scope(ctx.digits + 10);
    BigComplex W = exp(ctx.log_w0 * to_complex(Rational(-N, k)));
    BigComplex s1 = czero(), s2 = czero();
    Real Ninv = Real(1) / Real(N), p = Real(1);
    for (long j = 0; j < r; ++j) {
        s1 += e1.coeffs[static_cast<size_t>(j)] * p;
        s2 += conj(e2.coeffs[static_cast<size_t>(j)]) * p;
        p *= Ninv;
    }
    return (W * s1 + conj(W) * s2) * pow(Real(N), m - 1);
}

// W_k(N, n) from the first r terms.
inline Real eval_asym_wave(const SaddleContext &ctx, long N, long n, long r)
{
    if (N < 1) throw parameter_error("N must be >= 1");
    long k = ctx.k;
    Rational lambda(n, N);
    lambda.canonicalize();
    AsymCoeffSet a = wave_coeffs(ctx, lambda, N % k, mod(n, k), r);
    precision_scope scope(ctx.digits + 10);
    BigComplex W = exp(ctx.log_w0 * to_complex(Rational(-N, k)));
    BigComplex s = czero();
    Real Ninv = Real(1) / Real(N), p = Ninv * Ninv;
    for (long j = 0; j < r; ++j) {
        s += a.coeffs[static_cast<size_t>(j)] * p;
        p *= Ninv;
    }
    return (W * s).re;
}

// C_{01l}(infinity) = -(pi^{5/2}/(12 sqrt 3)) Delta^{l-1} L_{3/2}(-pi^2 (alpha+1)/6) at alpha = 1/24.
inline Real rademacher_inf(long ell, long digits = 60)
{
    if (ell < 1) throw parameter_error("ell must be >= 1");
    precision_scope scope(digits + 10);
    Real pi = real_pi();
    Real acc(Real::bits_tag{}, working_bits());
    long n = ell - 1;
    for (long i = 0; i <= n; ++i) {
        Real alpha = Real(Rational(Rational(1, 24) + i));
        Real y = -(pi * pi * (alpha + 1)) / 6;
        Real t = bessel_L32(y) * Real(binomial(n, i));
        if ((n - i) % 2) acc -= t;
        else acc += t;
    }
    return -(pow(pi, Real(5) / 2) / (sqrt(Real(3)) * 12)) * acc;
}

} // namespace qexpand

#endif
