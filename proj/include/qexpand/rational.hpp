#ifndef QEXPAND_RATIONAL_HPP
#define QEXPAND_RATIONAL_HPP

#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace qexpand
{

using Rational = mpq_class;
using Integer = mpz_class;
using IntPoly = std::vector<Integer>; // low degree first

inline Rational make_rational(const Integer &num, const Integer &den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational parse_rational(const std::string &s)
{
    Rational r;
    if (r.set_str(s, 10) != 0) throw parameter_error("not a rational: " + s);
    if (r.get_den() == 0) throw parameter_error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational &r) { return r.get_str(10); }

inline Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// binom(n, j) for integer n of either sign via the falling factorial n(n-1)...(n-j+1)/j!.
inline Integer binomial(long n, long j)
{
    if (j < 0) return 0;
    Integer r;
    if (n >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
        return r;
    }
    mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(j));
    return r;
}

// binom(t, j) for rational t.
inline Rational binomial(const Rational &t, long j)
{
    if (j < 0) return 0;
    Rational r = 1;
    for (long i = 0; i < j; ++i) r *= (t - i);
    r /= Rational(factorial(static_cast<unsigned long>(j)));
    return r;
}

inline long gcd(long a, long b) { return std::gcd(a, b); }

inline long mod(long a, long k)
{
    long r = a % k;
    return r < 0 ? r + k : r;
}

inline void validate_root(long k, long h)
{
    if (k < 1) throw parameter_error("k must be >= 1");
    if (gcd(mod(h, k), k) != 1) throw parameter_error("gcd(h,k) must be 1");
}

inline long euler_phi(long k)
{
    long r = k;
    for (long p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            while (k % p == 0) k /= p;
            r -= r / p;
        }
    }
    if (k > 1) r -= r / k;
    return r;
}

inline std::vector<long> units_mod(long k)
{
    std::vector<long> out;
    for (long h = 0; h < k; ++h)
        if (std::gcd(h, k) == 1) out.push_back(h);
    return out;
}

} // namespace qexpand

#endif
