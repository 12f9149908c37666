#ifndef QEXPAND_COMPLEX_SERIES_HPP
#define QEXPAND_COMPLEX_SERIES_HPP

#include <algorithm>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"

namespace qexpand
{

// Truncated Taylor series sum_{n < order} a_n (z - center)^n with BigComplex coefficients.
class ComplexSeries
{
public:
    ComplexSeries() = default;
    ComplexSeries(BigComplex center, std::vector<BigComplex> coeffs)
        : center_(std::move(center)), a_(std::move(coeffs))
    {
    }

    static ComplexSeries constant(const BigComplex &center, const BigComplex &value, size_t order)
    {
        std::vector<BigComplex> a(order, zero_at(value.bits()));
        if (order) a[0] = value;
        return {center, std::move(a)};
    }

    // The series of z itself.
    static ComplexSeries identity(const BigComplex &center, size_t order)
    {
        auto s = constant(center, center, order);
        if (order > 1) s.a_[1] = zero_at(center.bits()) + 1;
        return s;
    }

    // e^{a z} expanded at the center.
    static ComplexSeries exp_linear(const BigComplex &center, const BigComplex &a, size_t order)
    {
        std::vector<BigComplex> c(order, zero_at(center.bits()));
        if (!order) return {center, c};
        c[0] = exp(a * center);
        for (size_t n = 1; n < order; ++n) c[n] = c[n - 1] * a / static_cast<long>(n);
        return {center, std::move(c)};
    }

    const BigComplex &center() const { return center_; }
    size_t order() const { return a_.size(); }
    const BigComplex &operator[](size_t n) const { return a_[n]; }
    BigComplex &operator[](size_t n) { return a_[n]; }
    const std::vector<BigComplex> &coeffs() const { return a_; }
    mpfr_prec_t bits() const { return a_.empty() ? center_.bits() : a_[0].bits(); }

    ComplexSeries truncated(size_t order) const
    {
        std::vector<BigComplex> a(a_.begin(), a_.begin() + static_cast<long>(std::min(order, a_.size())));
        return {center_, std::move(a)};
    }

    ComplexSeries operator-() const
    {
        ComplexSeries r = *this;
        for (auto &x : r.a_) x = -x;
        return r;
    }
    ComplexSeries &operator+=(const ComplexSeries &o)
    {
        if (o.order() < order()) a_.resize(o.order());
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    ComplexSeries &operator-=(const ComplexSeries &o)
    {
        if (o.order() < order()) a_.resize(o.order());
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    ComplexSeries &operator+=(const BigComplex &c)
    {
        if (!a_.empty()) a_[0] += c;
        return *this;
    }
    ComplexSeries &operator*=(const BigComplex &c)
    {
        for (auto &x : a_) x *= c;
        return *this;
    }
    ComplexSeries &operator*=(const ComplexSeries &o)
    {
        size_t n = std::min(order(), o.order());
        std::vector<BigComplex> r(n, zero_at(bits()));
        for (size_t i = 0; i < n; ++i) {
            if (a_[i].re.is_zero() && a_[i].im.is_zero()) continue;
            for (size_t j = 0; i + j < n; ++j) r[i + j] += a_[i] * o.a_[j];
        }
        a_ = std::move(r);
        return *this;
    }

    friend ComplexSeries operator+(ComplexSeries a, const ComplexSeries &b) { return a += b; }
    friend ComplexSeries operator-(ComplexSeries a, const ComplexSeries &b) { return a -= b; }
    friend ComplexSeries operator*(ComplexSeries a, const ComplexSeries &b) { return a *= b; }
    friend ComplexSeries operator+(ComplexSeries a, const BigComplex &b) { return a += b; }
    friend ComplexSeries operator-(ComplexSeries a, const BigComplex &b) { return a += -b; }
    friend ComplexSeries operator-(const BigComplex &b, const ComplexSeries &a) { return (-a) += b; }
    friend ComplexSeries operator*(ComplexSeries a, const BigComplex &b) { return a *= b; }
    friend ComplexSeries operator*(const BigComplex &b, ComplexSeries a) { return a *= b; }

    friend ComplexSeries inv(const ComplexSeries &s)
    {
        if (s.a_.empty()) return s;
        if (s.a_[0].re.is_zero() && s.a_[0].im.is_zero())
            throw parameter_error("series inverse: zero constant term");
        size_t n = s.order();
        BigComplex i0 = (zero_at(s.bits()) + 1) / s.a_[0];
        std::vector<BigComplex> t(n, zero_at(s.bits()));
        t[0] = i0;
        for (size_t i = 1; i < n; ++i) {
            BigComplex acc = zero_at(s.bits());
            for (size_t j = 1; j <= i; ++j) acc += s.a_[j] * t[i - j];
            t[i] = -(acc * i0);
        }
        return {s.center_, std::move(t)};
    }

    friend ComplexSeries operator/(const ComplexSeries &a, const ComplexSeries &b) { return a * inv(b); }

    friend ComplexSeries exp(const ComplexSeries &s)
    {
        size_t n = s.order();
        std::vector<BigComplex> t(n, zero_at(s.bits()));
        if (!n) return {s.center_, t};
        t[0] = exp(s.a_[0]);
        for (size_t m = 1; m < n; ++m) {
            BigComplex acc = zero_at(s.bits());
            for (size_t i = 1; i <= m; ++i) acc += s.a_[i] * t[m - i] * static_cast<long>(i);
            t[m] = acc / static_cast<long>(m);
        }
        return {s.center_, std::move(t)};
    }

    // Principal log; the constant term must avoid (-inf, 0].
    friend ComplexSeries log(const ComplexSeries &s)
    {
        check_branch(s, "series log");
        size_t n = s.order();
        std::vector<BigComplex> l(n, zero_at(s.bits()));
        if (!n) return {s.center_, l};
        l[0] = log(s.a_[0]);
        BigComplex i0 = (zero_at(s.bits()) + 1) / s.a_[0];
        for (size_t m = 1; m < n; ++m) {
            BigComplex acc = s.a_[m] * static_cast<long>(m);
            for (size_t i = 1; i < m; ++i) acc -= l[i] * s.a_[m - i] * static_cast<long>(i);
            l[m] = acc * i0 / static_cast<long>(m);
        }
        return {s.center_, std::move(l)};
    }

    // s^tau with the principal root of the constant term and a binomial expansion of the rest.
    friend ComplexSeries pow(const ComplexSeries &s, const BigComplex &tau)
    {
        check_branch(s, "series power");
        size_t n = s.order();
        std::vector<BigComplex> f(n, zero_at(s.bits()));
        if (!n) return {s.center_, f};
        BigComplex i0 = (zero_at(s.bits()) + 1) / s.a_[0];
        std::vector<BigComplex> g(n, zero_at(s.bits()));
        for (size_t i = 0; i < n; ++i) g[i] = s.a_[i] * i0;
        f[0] = zero_at(s.bits()) + 1;
        for (size_t m = 1; m < n; ++m) {
            BigComplex acc = zero_at(s.bits());
            for (size_t k = 1; k <= m; ++k)
                acc += (tau * static_cast<long>(k) - static_cast<long>(m - k)) * g[k] * f[m - k];
            f[m] = acc / static_cast<long>(m);
        }
        BigComplex lead = pow(s.a_[0], tau);
        for (auto &x : f) x *= lead;
        return {s.center_, std::move(f)};
    }

    friend ComplexSeries pow(const ComplexSeries &s, long e)
    {
        ComplexSeries base = e < 0 ? inv(s) : s;
        unsigned long u = static_cast<unsigned long>(e < 0 ? -e : e);
        ComplexSeries r = constant(s.center_, zero_at(s.bits()) + 1, s.order());
        while (u) {
            if (u & 1) r *= base;
            u >>= 1;
            if (u) base *= base;
        }
        return r;
    }

    // outer(inner(z)); inner's constant term must be outer's center.
    friend ComplexSeries compose(const ComplexSeries &outer, const ComplexSeries &inner)
    {
        size_t n = std::min(outer.order(), inner.order());
        ComplexSeries d = inner.truncated(n);
        d[0] = zero_at(inner.bits());
        ComplexSeries r = constant(inner.center_, zero_at(inner.bits()), n);
        for (size_t i = outer.order(); i-- > 0;) {
            r *= d;
            r[0] += outer.a_[i];
        }
        return r;
    }

    // Value at center + t.
    BigComplex eval_offset(const BigComplex &t) const
    {
        BigComplex r = zero_at(bits());
        for (size_t i = a_.size(); i-- > 0;) r = r * t + a_[i];
        return r;
    }

private:
    static BigComplex zero_at(mpfr_prec_t bits) { return BigComplex(Real(Real::bits_tag{}, bits)); }

    static void check_branch(const ComplexSeries &s, const char *what)
    {
        if (s.a_.empty()) return;
        const BigComplex &c = s.a_[0];
        if (c.re.is_zero() && c.im.is_zero()) throw branch_error(std::string(what) + ": zero constant term");
        if (c.re.sign() < 0 && (c.im.is_zero() || abs(c.im) < ldexp(abs(c.re), -(c.bits() / 2))))
            throw branch_error(std::string(what) + ": constant term on the negative real axis");
    }

    BigComplex center_;
    std::vector<BigComplex> a_;
};

} // namespace qexpand

#endif
