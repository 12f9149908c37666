#ifndef QEXPAND_LAURENT_HPP
#define QEXPAND_LAURENT_HPP

#include <algorithm>
#include <climits>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"

namespace qexpand
{

// Truncated Laurent series over Q(xi_k): sum_{e = val}^{order-1} c_e z^e + O(z^order).
// A series with no nonzero known coefficient is "zero up to order" and has no valuation.
class ExactLaurentSeries
{
public:
    ExactLaurentSeries(long k, long order) : k_(k), val_(order), order_(order) {}

    // Coefficients for z^val, z^{val+1}, ... ; order = val + coeffs.size() unless given.
    ExactLaurentSeries(long k, long val, std::vector<CyclotomicElement> coeffs, long order)
        : k_(k), val_(val), order_(order), c_(std::move(coeffs))
    {
        if (order_ < val_) throw parameter_error("order below valuation");
        c_.resize(static_cast<size_t>(order_ - val_), CyclotomicElement(k_));
        normalize();
    }

    static ExactLaurentSeries from_rationals(long val, const std::vector<Rational> &q, long order)
    {
        std::vector<CyclotomicElement> c;
        for (const auto &x : q) c.emplace_back(1, x);
        return ExactLaurentSeries(1, val, std::move(c), order);
    }

    long conductor() const { return k_; }
    long order() const { return order_; }
    bool is_zero() const { return c_.empty(); }
    long valuation() const
    {
        if (is_zero()) throw parameter_error("valuation of a series that is zero up to its order");
        return val_;
    }

    // Coefficient of z^e; reading at or past the order is an error.
    CyclotomicElement coefficient(long e) const
    {
        if (e >= order_) throw parameter_error("coefficient beyond guaranteed order");
        if (is_zero() || e < val_) return CyclotomicElement(k_);
        return c_[static_cast<size_t>(e - val_)];
    }

    ExactLaurentSeries truncated(long order) const
    {
        long o = std::min(order, order_);
        if (is_zero() || o <= val_) return ExactLaurentSeries(k_, o);
        std::vector<CyclotomicElement> c(c_.begin(), c_.begin() + (o - val_));
        return ExactLaurentSeries(k_, val_, std::move(c), o);
    }

    friend ExactLaurentSeries laurent_add(const ExactLaurentSeries &a, const ExactLaurentSeries &b)
    {
        a.check(b);
        long o = std::min(a.order_, b.order_);
        long v = std::min(a.is_zero() ? o : a.val_, b.is_zero() ? o : b.val_);
        if (v >= o) return ExactLaurentSeries(a.k_, o);
        std::vector<CyclotomicElement> c;
        for (long e = v; e < o; ++e) c.push_back(a.coefficient(e) + b.coefficient(e));
        return ExactLaurentSeries(a.k_, v, std::move(c), o);
    }

    friend ExactLaurentSeries laurent_neg(const ExactLaurentSeries &a)
    {
        ExactLaurentSeries r = a;
        for (auto &x : r.c_) x = -x;
        return r;
    }

    friend ExactLaurentSeries laurent_mul(const ExactLaurentSeries &a, const ExactLaurentSeries &b)
    {
        a.check(b);
        if (a.is_zero() && b.is_zero()) return ExactLaurentSeries(a.k_, a.order_ + b.order_);
        if (a.is_zero()) return ExactLaurentSeries(a.k_, a.order_ + b.val_);
        if (b.is_zero()) return ExactLaurentSeries(a.k_, b.order_ + a.val_);
        long o = std::min(a.val_ + b.order_, b.val_ + a.order_);
        long v = a.val_ + b.val_;
        std::vector<CyclotomicElement> c(static_cast<size_t>(o - v), CyclotomicElement(a.k_));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size() && i + j < c.size(); ++j)
                if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
        }
        return ExactLaurentSeries(a.k_, v, std::move(c), o);
    }

    // t with s*t = 1 + O(z^{order(s) - val(s)}); val(t) = -val(s).
    friend ExactLaurentSeries laurent_invert(const ExactLaurentSeries &s)
    {
        if (s.is_zero()) throw parameter_error("inverting a series that is zero up to its order");
        size_t n = s.c_.size();
        CyclotomicElement inv0 = s.c_[0].inverse();
        std::vector<CyclotomicElement> t(n, CyclotomicElement(s.k_));
        t[0] = inv0;
        for (size_t i = 1; i < n; ++i) {
            CyclotomicElement acc(s.k_);
            for (size_t j = 1; j <= i; ++j)
                if (!s.c_[j].is_zero()) acc += s.c_[j] * t[i - j];
            t[i] = -(acc * inv0);
        }
        return ExactLaurentSeries(s.k_, -s.val_, std::move(t), -s.val_ + static_cast<long>(n));
    }

    // e^s for val(s) >= 1, by t' = s' t.
    friend ExactLaurentSeries exp_series(const ExactLaurentSeries &s)
    {
        if (!s.is_zero() && s.val_ < 1) throw parameter_error("exp_series needs valuation >= 1");
        long o = s.order_;
        if (o <= 0) return ExactLaurentSeries(s.k_, o);
        std::vector<CyclotomicElement> t(static_cast<size_t>(o), CyclotomicElement(s.k_));
        t[0] = CyclotomicElement(s.k_, Rational(1));
        for (long m = 1; m < o; ++m) {
            CyclotomicElement acc(s.k_);
            for (long i = 1; i <= m; ++i) {
                CyclotomicElement ci = s.coefficient(i);
                if (!ci.is_zero()) acc += ci * t[static_cast<size_t>(m - i)] * Rational(i);
            }
            t[static_cast<size_t>(m)] = acc / Rational(m);
        }
        return ExactLaurentSeries(s.k_, 0, std::move(t), o);
    }

    // log s for s = 1 + O(z), by the inverse recurrence of exp_series.
    friend ExactLaurentSeries log_series(const ExactLaurentSeries &s)
    {
        if (s.is_zero() || s.val_ != 0 || s.c_[0] != s.c_[0].one_like())
            throw parameter_error("log_series needs constant term 1");
        long o = s.order_;
        std::vector<CyclotomicElement> l(static_cast<size_t>(o), CyclotomicElement(s.k_));
        for (long m = 1; m < o; ++m) {
            CyclotomicElement acc = s.coefficient(m) * Rational(m);
            for (long i = 1; i < m; ++i) {
                CyclotomicElement si = s.coefficient(m - i);
                if (!si.is_zero() && !l[static_cast<size_t>(i)].is_zero())
                    acc -= l[static_cast<size_t>(i)] * si * Rational(i);
            }
            l[static_cast<size_t>(m)] = acc / Rational(m);
        }
        return ExactLaurentSeries(s.k_, 0, std::move(l), o);
    }

private:
    void check(const ExactLaurentSeries &o) const
    {
        if (o.k_ != k_) throw parameter_error("conductor mismatch");
    }
    void normalize()
    {
        size_t z = 0;
        while (z < c_.size() && c_[z].is_zero()) ++z;
        if (z == c_.size()) {
            c_.clear();
            val_ = order_;
            return;
        }
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(z));
        val_ += static_cast<long>(z);
    }

    long k_;
    long val_;
    long order_;
    std::vector<CyclotomicElement> c_;
};

} // namespace qexpand

#endif
