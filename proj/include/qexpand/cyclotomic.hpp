#ifndef QEXPAND_CYCLOTOMIC_HPP
#define QEXPAND_CYCLOTOMIC_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace qexpand
{

namespace detail
{

inline IntPoly poly_mul(const IntPoly &a, const IntPoly &b)
{
    IntPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact quotient by a monic divisor; throws if the remainder is nonzero.
inline IntPoly poly_divexact(IntPoly a, const IntPoly &b)
{
    size_t db = b.size() - 1;
    if (a.size() < b.size()) throw parameter_error("poly_divexact: degree");
    IntPoly q(a.size() - db, Integer(0));
    for (size_t i = a.size(); i-- > db;) {
        Integer c = a[i];
        q[i - db] = c;
        if (c != 0)
            for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw parameter_error("poly_divexact: remainder");
    return q;
}

} // namespace detail

// Phi_k, low degree first. Memoized; the table is append-only under a lock.
inline const IntPoly &cyclotomic_polynomial(long k)
{
    if (k < 1) throw parameter_error("cyclotomic_polynomial: k must be >= 1");
    static std::mutex mu;
    static std::map<long, std::unique_ptr<IntPoly>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return *it->second;
    }
    IntPoly num(static_cast<size_t>(k) + 1, Integer(0));
    num[0] = -1;
    num[static_cast<size_t>(k)] = 1;
    IntPoly den{Integer(1)};
    for (long d = 1; d < k; ++d)
        if (k % d == 0) den = detail::poly_mul(den, cyclotomic_polynomial(d));
    auto p = std::make_unique<IntPoly>(detail::poly_divexact(num, den));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, fresh] = cache.emplace(k, std::move(p));
    (void)fresh;
    return *it->second;
}

// Element of Q(xi_k), xi_k = e^{2 pi i/k}, stored in the power basis 1, xi, ..., xi^{phi(k)-1}.
class CyclotomicElement
{
public:
    CyclotomicElement() : CyclotomicElement(1) {}
    explicit CyclotomicElement(long k) : k_(k), c_(static_cast<size_t>(euler_phi(k)), Rational(0))
    {
        if (k < 1) throw parameter_error("conductor must be >= 1");
    }
    CyclotomicElement(long k, const Rational &r) : CyclotomicElement(k) { c_[0] = r; }
    CyclotomicElement(long k, std::vector<Rational> coords) : k_(k), c_(std::move(coords))
    {
        if (static_cast<long>(c_.size()) != euler_phi(k)) reduce_long();
    }

    // xi^j, any integer j.
    static CyclotomicElement xi_power(long k, long j)
    {
        std::vector<Rational> v(static_cast<size_t>(k), Rational(0));
        v[static_cast<size_t>(mod(j, k))] = 1;
        return CyclotomicElement(k, std::move(v));
    }

    long conductor() const { return k_; }
    long degree() const { return static_cast<long>(c_.size()); }
    const std::vector<Rational> &coords() const { return c_; }
    const Rational &operator[](size_t i) const { return c_[i]; }

    bool is_zero() const
    {
        for (const auto &x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const
    {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    const Rational &rational_value() const
    {
        if (!is_rational()) throw parameter_error("element is not rational");
        return c_[0];
    }

    CyclotomicElement zero_like() const { return CyclotomicElement(k_); }
    CyclotomicElement one_like() const { return CyclotomicElement(k_, Rational(1)); }

    CyclotomicElement operator-() const
    {
        CyclotomicElement r(*this);
        for (auto &x : r.c_) x = -x;
        return r;
    }
    CyclotomicElement &operator+=(const CyclotomicElement &o)
    {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    CyclotomicElement &operator-=(const CyclotomicElement &o)
    {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    CyclotomicElement &operator*=(const Rational &q)
    {
        for (auto &x : c_) x *= q;
        return *this;
    }
    CyclotomicElement &operator/=(const Rational &q)
    {
        if (q == 0) throw parameter_error("division by zero");
        for (auto &x : c_) x /= q;
        return *this;
    }
    CyclotomicElement &operator*=(const CyclotomicElement &o)
    {
        check(o);
        if (c_.size() == 1) {
            c_[0] *= o.c_[0];
            return *this;
        }
        std::vector<Rational> p(2 * c_.size() - 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                if (o.c_[j] != 0) p[i + j] += c_[i] * o.c_[j];
        }
        c_ = std::move(p);
        reduce_long();
        return *this;
    }
    CyclotomicElement &operator/=(const CyclotomicElement &o) { return *this *= o.inverse(); }

    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement &b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement &b) { return a -= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement &b) { return a *= b; }
    friend CyclotomicElement operator/(CyclotomicElement a, const CyclotomicElement &b) { return a /= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const Rational &b) { return a *= b; }
    friend CyclotomicElement operator*(const Rational &b, CyclotomicElement a) { return a *= b; }
    friend CyclotomicElement operator/(CyclotomicElement a, const Rational &b) { return a /= b; }
    friend bool operator==(const CyclotomicElement &a, const CyclotomicElement &b)
    {
        return a.k_ == b.k_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CyclotomicElement &a, const CyclotomicElement &b) { return !(a == b); }

    // sigma_h : xi -> xi^h, gcd(h,k) = 1.
    CyclotomicElement galois(long h) const
    {
        if (gcd(mod(h, k_), k_) != 1) throw parameter_error("galois: gcd(h,k) != 1");
        std::vector<Rational> v(static_cast<size_t>(k_), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i)
            v[static_cast<size_t>(mod(h * static_cast<long>(i), k_))] += c_[i];
        return CyclotomicElement(k_, std::move(v));
    }

    CyclotomicElement conj() const { return galois(-1); }

    // Norm to Q and inverse via the product of the other conjugates.
    CyclotomicElement inverse() const
    {
        if (is_zero()) throw parameter_error("inverse of zero");
        if (c_.size() == 1) return CyclotomicElement(k_, Rational(1) / c_[0]);
        CyclotomicElement others = one_like();
        for (long h : units_mod(k_))
            if (h != 1) others *= galois(h);
        CyclotomicElement n = others * (*this);
        return others / n.rational_value();
    }

    // Value at xi = e^{2 pi i h/k}; h = 1 is the standard embedding.
    BigComplex embed(long h = 1, mpfr_prec_t bits = working_bits()) const
    {
        BigComplex acc(Real(Real::bits_tag{}, bits), Real(Real::bits_tag{}, bits));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            BigComplex t = root_of_unity(h * static_cast<long>(i), k_, bits);
            Real q(Real::bits_tag{}, bits);
            mpfr_set_q(q.get(), c_[i].get_mpq_t(), MPFR_RNDN);
            acc += t * q;
        }
        return acc;
    }

    std::string to_string() const
    {
        if (c_.size() == 1) return c_[0].get_str();
        std::string s = "[";
        for (size_t i = 0; i < c_.size(); ++i) s += (i ? ", " : "") + c_[i].get_str();
        return s + "]";
    }

private:
    void check(const CyclotomicElement &o) const
    {
        if (o.k_ != k_) throw parameter_error("conductor mismatch");
    }
    void reduce_long()
    {
        const IntPoly &phi = cyclotomic_polynomial(k_);
        size_t d = phi.size() - 1;
        for (size_t i = c_.size(); i-- > d;) {
            if (c_[i] == 0) continue;
            Rational t = c_[i];
            for (size_t j = 0; j <= d; ++j)
                if (phi[j] != 0) c_[i - d + j] -= t * Rational(phi[j]);
        }
        c_.resize(d, Rational(0));
    }

    long k_;
    std::vector<Rational> c_;
};

inline CyclotomicElement cyclo_mul(const CyclotomicElement &a, const CyclotomicElement &b) { return a * b; }

// Trace from Q(xi_k) to Q: sum of all Galois conjugates.
inline Rational trace(const CyclotomicElement &a)
{
    CyclotomicElement s = a.zero_like();
    for (long h : units_mod(a.conductor())) s += a.galois(h);
    return s.rational_value();
}

} // namespace qexpand

#endif
