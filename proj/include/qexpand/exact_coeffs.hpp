#ifndef QEXPAND_EXACT_COEFFS_HPP
#define QEXPAND_EXACT_COEFFS_HPP

#include <string>
#include <vector>

#include "complex.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "number_tables.hpp"
#include "rational.hpp"

namespace qexpand
{

struct CoeffRequest {
    long m = 0;
    long k = 1;
    long h = 0;
    long N = 1;
};

// S[n][r] = delta_{0,r} (m+1) + sum_{1<=j<=N, j = r mod k} j^n for 1 <= n <= M; row 0 is unused.
inline std::vector<std::vector<Integer>> power_sums(long k, long m, long N, long M)
{
    std::vector<std::vector<Integer>> S(static_cast<size_t>(M) + 1,
                                        std::vector<Integer>(static_cast<size_t>(k), Integer(0)));
    for (long n = 1; n <= M; ++n) S[static_cast<size_t>(n)][0] = m + 1;
    Integer pw;
    for (long j = 1; j <= N; ++j) {
        size_t r = static_cast<size_t>(j % k);
        pw = j;
        for (long n = 1; n <= M; ++n) {
            S[static_cast<size_t>(n)][r] += pw;
            if (n < M) pw *= j;
        }
    }
    return S;
}

namespace detail
{

// t_0..t_M of exp(sum_{i>=1} c_i z^i), c[0] ignored.
template <typename T>
std::vector<T> exp_coefficients(const std::vector<T> &c, long M, const T &one)
{
    std::vector<T> t(static_cast<size_t>(M) + 1, one * Rational(0));
    t[0] = one;
    for (long m = 1; m <= M; ++m) {
        T acc = one * Rational(0);
        for (long i = 1; i <= m && i < static_cast<long>(c.size()); ++i)
            acc += c[static_cast<size_t>(i)] * t[static_cast<size_t>(m - i)] * Rational(i);
        t[static_cast<size_t>(m)] = acc / Rational(m);
    }
    return t;
}

// Exponent series of the residue integrand at xi = e^{2 pi i/k}:
// c_1 = lin - N(N+1)/2 - sum_r beta_1(xi^r) S_{1,r}, c_n = -sum_r beta_n(xi^r) S_{n,r}/(n n!).
inline std::vector<CyclotomicElement> exponent_series(long k, long N, long m_shift, const Integer &lin, long M)
{
    std::vector<CyclotomicElement> c(static_cast<size_t>(M) + 1, CyclotomicElement(k));
    if (M < 1) return c;
    auto S = power_sums(k, m_shift, N, M);
    Integer nf = 1;
    for (long n = 1; n <= M; ++n) {
        nf *= n;
        CyclotomicElement acc(k);
        for (long r = 0; r < k; ++r) {
            const Integer &s = S[static_cast<size_t>(n)][static_cast<size_t>(r)];
            if (s != 0) acc += apostol_bernoulli(n, k, r) * Rational(s);
        }
        acc /= -Rational(nf * n);
        c[static_cast<size_t>(n)] = std::move(acc);
    }
    c[1] += CyclotomicElement(k, Rational(lin - Integer(N) * (N + 1) / 2));
    return c;
}

// (-1)^s / (k^{2s+1} s!) prod_{w=N_k+1}^{k-1} (1 - xi^w)
inline CyclotomicElement residue_prefactor(long k, long N)
{
    long s = N / k, Nk = N % k;
    CyclotomicElement p(k, Rational(1));
    for (long w = Nk + 1; w < k; ++w) p *= p.one_like() - CyclotomicElement::xi_power(k, w);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(2 * s + 1));
    den *= factorial(static_cast<unsigned long>(s));
    Rational f(1, 1);
    f /= Rational(den);
    if (s % 2) f = -f;
    return p * f;
}

} // namespace detail

// Brute force: expand every factor 1 - (xi^h + u)^j exactly and invert the product.
// Coefficients of u^{-floor(N/k)} .. u^{m_max}.
inline ExactLaurentSeries laurent_oracle(long k, long h, long N, long m_max)
{
    validate_root(k, h);
    if (N < 1) throw parameter_error("N must be >= 1");
    if (N > 64) throw parameter_error("laurent_oracle is limited to N <= 64");
    long s = N / k;
    if (m_max < -s) m_max = -s;
    long ord = 2 * s + m_max + 1;
    CyclotomicElement xi = CyclotomicElement::xi_power(k, h);
    ExactLaurentSeries prod(k, 0, {CyclotomicElement(k, Rational(1))}, ord);
    std::vector<CyclotomicElement> xpow{CyclotomicElement(k, Rational(1))};
    for (long j = 1; j <= N; ++j) xpow.push_back(xpow.back() * xi);
    for (long j = 1; j <= N; ++j) {
        std::vector<CyclotomicElement> f;
        for (long i = 0; i < ord && i <= j; ++i) {
            CyclotomicElement t = xpow[static_cast<size_t>(j - i)] * Rational(-binomial(j, i));
            if (i == 0) t += t.one_like();
            f.push_back(std::move(t));
        }
        prod = laurent_mul(prod, ExactLaurentSeries(k, 0, std::move(f), ord)).truncated(ord);
    }
    return laurent_invert(prod);
}

// A_m(e^{2 pi i h/k}, N) by the log-exp route; exact zero below the pole order.
inline CyclotomicElement a_exact(long m, long k, long h, long N)
{
    validate_root(k, h);
    if (N < 1) throw parameter_error("N must be >= 1");
    long s = N / k;
    long M = s + m;
    if (M < 0) return CyclotomicElement(k);
    auto c = detail::exponent_series(k, N, m, Integer(-m), M);
    auto t = detail::exp_coefficients(c, M, CyclotomicElement(k, Rational(1)));
    CyclotomicElement a = detail::residue_prefactor(k, N) * CyclotomicElement::xi_power(k, -m) *
                          t[static_cast<size_t>(M)];
    return k == 1 ? a : a.galois(mod(h, k));
}

inline CyclotomicElement a_exact(const CoeffRequest &r) { return a_exact(r.m, r.k, r.h, r.N); }

// C_{hkl}(N) = A_{-l}(e^{2 pi i h/k}, N)
inline CyclotomicElement rademacher_c(long h, long k, long ell, long N)
{
    if (ell < 1) throw parameter_error("ell must be >= 1");
    return a_exact(-ell, k, h, N);
}

// W_k(N,n): per-root residues in Q(xi_k), summed over the Galois orbit.
inline Rational wave_exact(long k, long N, long n)
{
    if (k < 1 || N < 1) throw parameter_error("wave_exact: k, N must be >= 1");
    if (k > N) return 0;
    long s = N / k;
    auto c = detail::exponent_series(k, N, -1, Integer(-n), s - 1);
    auto t = detail::exp_coefficients(c, s - 1, CyclotomicElement(k, Rational(1)));
    CyclotomicElement one_root = -(detail::residue_prefactor(k, N) * CyclotomicElement::xi_power(k, -n) *
                                   t[static_cast<size_t>(s - 1)]);
    CyclotomicElement total = one_root.zero_like();
    for (long h : units_mod(k)) total += k == 1 ? one_root : one_root.galois(h);
    if (!total.is_rational())
        throw convergence_error("wave_exact: Galois orbit sum is not rational: " + total.to_string());
    return total.rational_value();
}

// 1/(q)_N directly and as the sum of all principal parts; returns |difference|.
inline Real partial_fraction_check(long N, const BigComplex &q)
{
    mpfr_prec_t bits = q.bits();
    BigComplex one(Real(Real::bits_tag{}, bits) + 1);
    BigComplex direct = one, qj = one;
    for (long j = 1; j <= N; ++j) {
        qj *= q;
        direct *= one - qj;
    }
    direct = one / direct;
    BigComplex sum(Real(Real::bits_tag{}, bits));
    for (long k = 1; k <= N; ++k) {
        for (long h : units_mod(k)) {
            BigComplex d = q - root_of_unity(h, k, bits);
            BigComplex dinv = one / d, dp = one;
            for (long ell = 1; ell <= N / k; ++ell) {
                dp *= dinv;
                sum += rademacher_c(h, k, ell, N).embed(1, bits) * dp;
            }
        }
    }
    return abs(direct - sum);
}

} // namespace qexpand

#endif
