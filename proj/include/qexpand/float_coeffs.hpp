#ifndef QEXPAND_FLOAT_COEFFS_HPP
#define QEXPAND_FLOAT_COEFFS_HPP

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "complex_series.hpp"
#include "exact_coeffs.hpp"
#include "number_tables.hpp"

// Floating evaluation of the exact residue formulas for N far beyond the rational engine.
// Same exponent series and exp recurrence, carried out at a fixed working precision.

namespace qexpand
{

// beta_n(rho)/n! for n = 0..nmax, rho = e^{2 pi i a/d}.
inline std::vector<BigComplex> apostol_bernoulli_float(long a, long d, long nmax)
{
    mpfr_prec_t bits = working_bits();
    std::vector<BigComplex> b(static_cast<size_t>(nmax) + 1, BigComplex(Real(Real::bits_tag{}, bits)));
    if (mod(a, d) == 0) {
        // B_n/n! = (-1)^{n/2+1} 2 zeta(n)/(2 pi)^n for even n >= 2
        b[0] = BigComplex(Real(Real::bits_tag{}, bits) + 1);
        if (nmax >= 1) b[1] = BigComplex(Real(Real::bits_tag{}, bits) - 1) / 2L;
        Real twopi = real_pi(bits) * 2;
        Real ip = 1 / (twopi * twopi);
        Real pw = ip;
        for (long n = 2; n <= nmax; n += 2) {
            Real v = zeta_ui(static_cast<unsigned long>(n), bits) * pw * 2;
            b[static_cast<size_t>(n)] = BigComplex((n / 2) % 2 ? v : -v);
            pw *= ip;
        }
        return b;
    }
    // z/(rho e^z - 1): invert rho e^z - 1 as a power series
    BigComplex rho = root_of_unity(a, d, bits);
    BigComplex zero(Real(Real::bits_tag{}, bits));
    std::vector<BigComplex> den(static_cast<size_t>(nmax) + 1, zero);
    den[0] = rho - 1L;
    BigComplex t = rho;
    for (long n = 1; n <= nmax; ++n) {
        t /= n;
        den[static_cast<size_t>(n)] = t;
    }
    ComplexSeries inv_den = inv(ComplexSeries(zero, std::move(den)));
    for (long n = 1; n <= nmax; ++n) b[static_cast<size_t>(n)] = inv_den[static_cast<size_t>(n - 1)];
    return b;
}

namespace detail
{

// Exponent series c_1..c_M at xi = e^{2 pi i h/k} (float analogue of exponent_series).
inline std::vector<BigComplex> exponent_series_float(long k, long h, long N, long m_shift, long lin, long M)
{
    mpfr_prec_t bits = working_bits();
    BigComplex zero(Real(Real::bits_tag{}, bits));
    std::vector<BigComplex> c(static_cast<size_t>(M) + 1, zero);
    if (M < 1) return c;
    // S[r][n] = delta_{0r}(m_shift + 1) + sum_{j <= N, j = r mod k} j^n
    std::vector<std::vector<Real>> S(static_cast<size_t>(k), std::vector<Real>(static_cast<size_t>(M) + 1, Real(Real::bits_tag{}, bits)));
    for (long n = 1; n <= M; ++n) S[0][static_cast<size_t>(n)] += m_shift + 1;
    Real pw(Real::bits_tag{}, bits);
    for (long j = 1; j <= N; ++j) {
        auto &row = S[static_cast<size_t>(j % k)];
        mpfr_set_ui(pw.get(), static_cast<unsigned long>(j), MPFR_RNDN);
        for (long n = 1; n <= M; ++n) {
            row[static_cast<size_t>(n)] += pw;
            mpfr_mul_ui(pw.get(), pw.get(), static_cast<unsigned long>(j), MPFR_RNDN);
        }
    }
    std::vector<std::vector<BigComplex>> beta;
    for (long r = 0; r < k; ++r) beta.push_back(apostol_bernoulli_float(mod(h * r, k), k, M));
    for (long n = 1; n <= M; ++n) {
        BigComplex acc = zero;
        for (long r = 0; r < k; ++r) acc += beta[static_cast<size_t>(r)][static_cast<size_t>(n)] * S[static_cast<size_t>(r)][static_cast<size_t>(n)];
        c[static_cast<size_t>(n)] = -(acc / n);
    }
    c[1] += BigComplex(Real(lin) - Real(Integer(Integer(N) * (N + 1) / 2)));
    return c;
}

// t_M of exp(sum c_i z^i)
inline BigComplex exp_coefficient_float(const std::vector<BigComplex> &c, long M,
                                        const std::function<void(long, long)> &progress = {})
{
    mpfr_prec_t bits = working_bits();
    BigComplex zero(Real(Real::bits_tag{}, bits));
    std::vector<BigComplex> ic(static_cast<size_t>(M) + 1, zero), t(static_cast<size_t>(M) + 1, zero);
    for (long i = 1; i <= M; ++i) ic[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] * i;
    t[0] = zero + 1L;
    for (long m = 1; m <= M; ++m) {
        BigComplex acc = zero;
        for (long i = 1; i <= m; ++i) acc += ic[static_cast<size_t>(i)] * t[static_cast<size_t>(m - i)];
        t[static_cast<size_t>(m)] = acc / m;
        if (progress && m % 256 == 0) progress(m, M);
    }
    return t[static_cast<size_t>(M)];
}

} // namespace detail

// A_m(e^{2 pi i h/k}, N) at the current working precision.
inline BigComplex a_float(long m, long k, long h, long N, const std::function<void(long, long)> &progress = {})
{
    validate_root(k, h);
    if (N < 1) throw parameter_error("N must be >= 1");
    long s = N / k;
    long M = s + m;
    mpfr_prec_t bits = working_bits();
    if (M < 0) return BigComplex(Real(Real::bits_tag{}, bits));
    auto c = detail::exponent_series_float(k, h, N, m, -m, M);
    BigComplex t = detail::exp_coefficient_float(c, M, progress);
    return detail::residue_prefactor(k, N).embed(h, bits) * root_of_unity(-h * m, k, bits) * t;
}

// W_k(N, n) at the current working precision; the imaginary part of the orbit sum is dropped.
inline Real wave_float(long k, long N, long n, const std::function<void(long, long)> &progress = {})
{
    if (k < 1 || N < 1) throw parameter_error("wave_float: k, N must be >= 1");
    mpfr_prec_t bits = working_bits();
    BigComplex total(Real(Real::bits_tag{}, bits));
    if (k > N) return total.re;
    long s = N / k;
    CyclotomicElement pre = detail::residue_prefactor(k, N);
    for (long h : units_mod(k)) {
        auto c = detail::exponent_series_float(k, h, N, -1, -n, s - 1);
        BigComplex t = detail::exp_coefficient_float(c, s - 1, progress);
        total -= pre.embed(h, bits) * root_of_unity(-h * n, k, bits) * t;
    }
    return total.re;
}

struct VerifiedValue {
    BigComplex value;
    long digits = 0;        // precision of the final (higher) pass
    double agreement = 0;   // decimal digits shared by the two passes
};

inline double agreement_digits(const BigComplex &a, const BigComplex &b)
{
    Real d = abs(a - b), s = abs(b);
    if (s.is_zero()) return d.is_zero() ? INFINITY : 0;
    if (d.is_zero()) return static_cast<double>(bits_to_digits(std::min(a.bits(), b.bits())));
    return s.log10_abs() - d.log10_abs();
}

// Run f at P and 2P digits, doubling P until the passes agree to `want` digits.
inline VerifiedValue precision_doubled(const std::function<BigComplex()> &f, long want = 20, long start = 200,
                                       long max_digits = 12800)
{
    long P = start;
    BigComplex lo;
    {
        precision_scope scope(P);
        lo = f();
    }
    for (;;) {
        long P2 = 2 * P;
        BigComplex hi;
        {
            precision_scope scope(P2);
            hi = f();
        }
        double ag = agreement_digits(lo, hi);
        if (ag >= static_cast<double>(want)) return {hi, P2, ag};
        if (P2 >= max_digits)
            throw convergence_error("precision-doubled evaluation did not stabilise (" + std::to_string(ag) + " digits at " +
                                    std::to_string(P2) + ")");
        lo = std::move(hi);
        P = P2;
    }
}

} // namespace qexpand

#endif
