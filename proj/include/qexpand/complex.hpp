#ifndef QEXPAND_COMPLEX_HPP
#define QEXPAND_COMPLEX_HPP

#include <string>

#include "errors.hpp"
#include "real.hpp"

namespace qexpand
{

struct BigComplex {
    Real re, im;

    BigComplex() = default;
    BigComplex(Real r) : re(std::move(r)), im(Real::bits_tag{}, re.bits()) {}
    BigComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(int r) : re(r), im(0) {}
    BigComplex(long r) : re(r), im(0) {}
    BigComplex(const mpq_class &r) : re(r), im(0) {}

    mpfr_prec_t bits() const { return std::max(re.bits(), im.bits()); }

    BigComplex operator-() const { return {-re, -im}; }
    BigComplex &operator+=(const BigComplex &o) { re += o.re; im += o.im; return *this; }
    BigComplex &operator-=(const BigComplex &o) { re -= o.re; im -= o.im; return *this; }
    BigComplex &operator*=(const BigComplex &o)
    {
        Real a = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(a);
        return *this;
    }
    BigComplex &operator/=(const BigComplex &o)
    {
        Real d = o.re * o.re + o.im * o.im;
        Real a = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(a);
        return *this;
    }
    BigComplex &operator*=(const Real &o) { re *= o; im *= o; return *this; }
    BigComplex &operator/=(const Real &o) { re /= o; im /= o; return *this; }
    BigComplex &operator*=(long o) { re *= o; im *= o; return *this; }
    BigComplex &operator/=(long o) { re /= o; im /= o; return *this; }
    BigComplex &operator*=(const mpq_class &o) { re *= o; im *= o; return *this; }

    friend BigComplex operator+(BigComplex a, const BigComplex &b) { a += b; return a; }
    friend BigComplex operator-(BigComplex a, const BigComplex &b) { a -= b; return a; }
    friend BigComplex operator*(BigComplex a, const BigComplex &b) { a *= b; return a; }
    friend BigComplex operator/(BigComplex a, const BigComplex &b) { a /= b; return a; }
    friend BigComplex operator*(BigComplex a, const Real &b) { a *= b; return a; }
    friend BigComplex operator*(const Real &b, BigComplex a) { a *= b; return a; }
    friend BigComplex operator/(BigComplex a, const Real &b) { a /= b; return a; }
    friend BigComplex operator*(BigComplex a, long b) { a *= b; return a; }
    friend BigComplex operator*(long b, BigComplex a) { a *= b; return a; }
    friend BigComplex operator/(BigComplex a, long b) { a /= b; return a; }
    friend BigComplex operator+(BigComplex a, long b) { a.re += b; return a; }
    friend BigComplex operator-(BigComplex a, long b) { a.re -= b; return a; }
    friend BigComplex operator-(long b, const BigComplex &a) { BigComplex r = -a; r.re += b; return r; }
    friend BigComplex operator+(long b, BigComplex a) { a.re += b; return a; }
};

inline BigComplex conj(const BigComplex &z) { return {z.re, -z.im}; }
inline Real norm(const BigComplex &z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const BigComplex &z) { return hypot(z.re, z.im); }
inline BigComplex imag_unit(mpfr_prec_t bits = working_bits())
{
    return {Real(Real::bits_tag{}, bits), Real(Real::bits_tag{}, bits) + 1};
}

// Principal argument in (-pi, pi]; a signed zero imaginary part counts as +0.
inline Real arg(const BigComplex &z)
{
    if (z.im.is_zero()) {
        Real pos(Real::bits_tag{}, z.bits());
        return atan2(pos, z.re);
    }
    return atan2(z.im, z.re);
}

inline BigComplex exp(const BigComplex &z)
{
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

inline BigComplex log(const BigComplex &z)
{
    if (z.re.is_zero() && z.im.is_zero()) throw parameter_error("log(0)");
    return {log(abs(z)), arg(z)};
}

// True when z lies on (-inf, 0], where principal fractional powers jump.
inline bool on_branch_cut(const BigComplex &z)
{
    return z.im.is_zero() && z.re.sign() <= 0;
}

// z^tau with the principal branch.
inline BigComplex pow(const BigComplex &z, const BigComplex &tau)
{
    if (z.re.is_zero() && z.im.is_zero()) return BigComplex(Real(Real::bits_tag{}, z.bits()));
    return exp(tau * log(z));
}

inline BigComplex pow(const BigComplex &z, long n)
{
    BigComplex base = z, r(Real(Real::bits_tag{}, z.bits()) + 1);
    unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    if (n < 0) {
        BigComplex one(Real(Real::bits_tag{}, z.bits()) + 1);
        return one / r;
    }
    return r;
}

inline BigComplex sqrt(const BigComplex &z)
{
    if (z.re.is_zero() && z.im.is_zero()) return z;
    Real r = abs(z);
    Real a = sqrt((r + z.re) / 2);
    if (a.is_zero()) {
        Real b = sqrt((r - z.re) / 2);
        return {a, z.im.sign() < 0 ? -b : b};
    }
    return {a, z.im / (2 * a)};
}

// e^{2 pi i h/k}
inline BigComplex root_of_unity(long h, long k, mpfr_prec_t bits = working_bits())
{
    Real t = real_pi(bits) * 2 * h / k;
    return {cos(t), sin(t)};
}

inline BigComplex sin(const BigComplex &z) { return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)}; }
inline BigComplex cos(const BigComplex &z) { return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))}; }

inline std::string to_sci(const BigComplex &z, int digits)
{
    std::string s = to_sci(z.re, digits);
    if (z.im.sign() < 0)
        s += " - " + to_sci(-z.im, digits) + "i";
    else
        s += " + " + to_sci(z.im, digits) + "i";
    return s;
}

} // namespace qexpand

#endif
