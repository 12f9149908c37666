#ifndef QEXPAND_REAL_HPP
#define QEXPAND_REAL_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace qexpand
{

inline mpfr_prec_t digits_to_bits(long digits)
{
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 8;
}

inline long bits_to_digits(mpfr_prec_t bits)
{
    return static_cast<long>(std::floor(static_cast<double>(bits - 8) * 0.30102999566398120));
}

namespace detail
{
inline thread_local mpfr_prec_t default_bits = digits_to_bits(60);
}

// Precision used for values built from integers, doubles and rationals on this thread.
inline mpfr_prec_t working_bits() { return detail::default_bits; }
inline long working_digits() { return bits_to_digits(detail::default_bits); }

class precision_scope
{
public:
    explicit precision_scope(long digits) : saved_(detail::default_bits)
    {
        detail::default_bits = digits_to_bits(digits);
    }
    ~precision_scope() { detail::default_bits = saved_; }
    precision_scope(const precision_scope &) = delete;
    precision_scope &operator=(const precision_scope &) = delete;

private:
    mpfr_prec_t saved_;
};

// Owning mpfr_t. Every value keeps its own precision; binary operations round to the
// larger of the two operand precisions.
class Real
{
public:
    struct bits_tag {};

    Real() { init(working_bits()); mpfr_set_zero(v_, 1); }
    Real(bits_tag, mpfr_prec_t bits) { init(bits); mpfr_set_zero(v_, 1); }
    Real(int x) { init(working_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(long x) { init(working_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(long long x) { init(working_bits()); mpfr_set_si(v_, static_cast<long>(x), MPFR_RNDN); }
    Real(unsigned long x) { init(working_bits()); mpfr_set_ui(v_, x, MPFR_RNDN); }
    Real(double x) { init(working_bits()); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(const mpz_class &x) { init(working_bits()); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    Real(const mpq_class &x) { init(working_bits()); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
    explicit Real(const std::string &decimal)
    {
        init(working_bits());
        mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN);
    }

    Real(const Real &o) { init(mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real &&o) noexcept { init(MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
    Real &operator=(const Real &o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real &operator=(Real &&o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

    // Change precision keeping the value (rounded).
    Real &set_bits(mpfr_prec_t b)
    {
        mpfr_prec_round(v_, b, MPFR_RNDN);
        return *this;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // log10|x| as a double, safe for exponents far outside double range.
    double log10_abs() const
    {
        if (is_zero()) return -INFINITY;
        long e = 0;
        double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
        return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
    }

    Real operator-() const
    {
        Real r(bits_tag{}, bits());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real &operator+=(const Real &o) { grow(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real &operator-=(const Real &o) { grow(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real &operator*=(const Real &o) { grow(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real &operator/=(const Real &o) { grow(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real &operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real &operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real &operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real &operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real &operator*=(const mpz_class &o) { mpfr_mul_z(v_, v_, o.get_mpz_t(), MPFR_RNDN); return *this; }
    Real &operator*=(const mpq_class &o) { mpfr_mul_q(v_, v_, o.get_mpq_t(), MPFR_RNDN); return *this; }
    Real &operator+=(const mpq_class &o) { mpfr_add_q(v_, v_, o.get_mpq_t(), MPFR_RNDN); return *this; }

    friend Real operator+(Real a, const Real &b) { a += b; return a; }
    friend Real operator-(Real a, const Real &b) { a -= b; return a; }
    friend Real operator*(Real a, const Real &b) { a *= b; return a; }
    friend Real operator/(Real a, const Real &b) { a /= b; return a; }
    friend Real operator+(Real a, long b) { a += b; return a; }
    friend Real operator-(Real a, long b) { a -= b; return a; }
    friend Real operator*(Real a, long b) { a *= b; return a; }
    friend Real operator/(Real a, long b) { a /= b; return a; }
    friend Real operator+(long a, Real b) { b += a; return b; }
    friend Real operator-(long a, const Real &b) { Real r = -b; r += a; return r; }
    friend Real operator*(long a, Real b) { b *= a; return b; }
    friend Real operator/(long a, const Real &b)
    {
        Real r(bits_tag{}, b.bits());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real &a, const Real &b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real &a, const Real &b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real &a, const Real &b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real &a, const Real &b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real &a, const Real &b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const Real &a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real &a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }

private:
    void init(mpfr_prec_t b) { mpfr_init2(v_, std::max<mpfr_prec_t>(b, MPFR_PREC_MIN)); }
    void grow(const Real &o)
    {
        if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    }
    mpfr_t v_;
};

namespace detail
{
template <typename F>
Real unary(const Real &x, F f)
{
    Real r(Real::bits_tag{}, x.bits());
    f(r.get(), x.get(), MPFR_RNDN);
    return r;
}
} // namespace detail

inline Real abs(const Real &x) { return detail::unary(x, mpfr_abs); }
inline Real sqrt(const Real &x) { return detail::unary(x, mpfr_sqrt); }
inline Real exp(const Real &x) { return detail::unary(x, mpfr_exp); }
inline Real log(const Real &x) { return detail::unary(x, mpfr_log); }
inline Real log1p(const Real &x) { return detail::unary(x, mpfr_log1p); }
inline Real sin(const Real &x) { return detail::unary(x, mpfr_sin); }
inline Real cos(const Real &x) { return detail::unary(x, mpfr_cos); }
inline Real sinh(const Real &x) { return detail::unary(x, mpfr_sinh); }
inline Real cosh(const Real &x) { return detail::unary(x, mpfr_cosh); }
inline Real gamma(const Real &x) { return detail::unary(x, mpfr_gamma); }
inline Real floor(const Real &x)
{
    Real r(Real::bits_tag{}, x.bits());
    mpfr_floor(r.get(), x.get());
    return r;
}

inline Real atan2(const Real &y, const Real &x)
{
    Real r(Real::bits_tag{}, std::max(x.bits(), y.bits()));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

inline Real hypot(const Real &x, const Real &y)
{
    Real r(Real::bits_tag{}, std::max(x.bits(), y.bits()));
    mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

inline Real pow(const Real &x, const Real &y)
{
    Real r(Real::bits_tag{}, std::max(x.bits(), y.bits()));
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

inline Real pow(const Real &x, long n)
{
    Real r(Real::bits_tag{}, x.bits());
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

inline Real ldexp(const Real &x, long e)
{
    Real r(Real::bits_tag{}, x.bits());
    mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

inline Real real_pi(mpfr_prec_t bits = working_bits())
{
    Real r(Real::bits_tag{}, bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

inline Real real_log2(mpfr_prec_t bits = working_bits())
{
    Real r(Real::bits_tag{}, bits);
    mpfr_const_log2(r.get(), MPFR_RNDN);
    return r;
}

inline Real zeta_ui(unsigned long n, mpfr_prec_t bits = working_bits())
{
    Real r(Real::bits_tag{}, bits);
    mpfr_zeta_ui(r.get(), n, MPFR_RNDN);
    return r;
}

inline Real pow10(long e, mpfr_prec_t bits = working_bits())
{
    Real r(Real::bits_tag{}, bits);
    mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(std::labs(e)), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
    return r;
}

// Scientific rendering with `digits` significant digits, e.g. "3.8386e67".
inline std::string to_sci(const Real &x, int digits)
{
    if (x.is_zero()) return "0";
    if (!x.is_finite()) return "nan";
    mpfr_exp_t e = 0;
    char *s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x.get(), MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    std::string sign;
    if (m[0] == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    long ex = static_cast<long>(e) - 1;
    if (ex != 0) out += "e" + std::to_string(ex);
    return out;
}

// Fixed-point rendering used for small magnitudes (constants, figure columns).
inline std::string to_fixed(const Real &x, int decimals)
{
    char *buf = nullptr;
    std::string fmt = "%." + std::to_string(decimals) + "RNf";
    mpfr_asprintf(&buf, fmt.c_str(), x.get());
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

inline std::ostream &operator<<(std::ostream &os, const Real &x)
{
    return os << to_sci(x, static_cast<int>(std::min<long>(bits_to_digits(x.bits()), 30)));
}

} // namespace qexpand

#endif
