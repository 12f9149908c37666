#ifndef QEXPAND_NUMBER_TABLES_HPP
#define QEXPAND_NUMBER_TABLES_HPP

#include <mutex>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace qexpand
{

namespace detail
{

struct bernoulli_cache {
    std::mutex mu;
    std::vector<Rational> b{Rational(1), Rational(-1, 2)};
};

inline bernoulli_cache &bernoulli_store()
{
    static bernoulli_cache c;
    return c;
}

} // namespace detail

// B_0..B_{n_max} with B_1 = -1/2, from sum_{j<=n} binom(n+1,j) B_j = 0.
// Only even indices need the sum; odd ones beyond 1 vanish.
inline std::vector<Rational> bernoulli_numbers(long n_max)
{
    auto &c = detail::bernoulli_store();
    std::lock_guard<std::mutex> lock(c.mu);
    while (static_cast<long>(c.b.size()) <= n_max) {
        long n = static_cast<long>(c.b.size());
        if (n % 2 == 1) {
            c.b.emplace_back(0);
            continue;
        }
        Rational s = Rational(binomial(n + 1, 1)) * c.b[1];
        for (long j = 0; j < n; j += 2) s += Rational(binomial(n + 1, j)) * c.b[static_cast<size_t>(j)];
        s /= -(n + 1);
        c.b.push_back(s);
    }
    return std::vector<Rational>(c.b.begin(), c.b.begin() + n_max + 1);
}

inline Rational bernoulli(long n)
{
    if (n < 0) throw parameter_error("bernoulli: negative index");
    auto &c = detail::bernoulli_store();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        if (n < static_cast<long>(c.b.size())) return c.b[static_cast<size_t>(n)];
    }
    return bernoulli_numbers(n).back();
}

// Subset Stirling numbers from {n,j} = j{n-1,j} + {n-1,j-1}; rows memoized.
inline Integer stirling2(long n, long j)
{
    if (n < 0 || j < 0) throw parameter_error("stirling2: negative argument");
    if (j > n) return 0;
    static std::mutex mu;
    static std::vector<std::vector<Integer>> rows{{Integer(1)}};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(rows.size()) <= n) {
        const auto &prev = rows.back();
        size_t m = rows.size();
        std::vector<Integer> row(m + 1, Integer(0));
        for (size_t i = 1; i <= m; ++i) {
            Integer a = i < prev.size() ? prev[i] * Integer(static_cast<long>(i)) : Integer(0);
            row[i] = a + prev[i - 1];
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<size_t>(n)][static_cast<size_t>(j)];
}

// Norlund B_n^{(alpha)} by the closed Stirling-number sum.
inline Rational norlund(long n, long alpha)
{
    if (n < 0) throw parameter_error("norlund: n must be >= 0");
    Rational s = 0;
    for (long j = 0; j <= n; ++j) {
        Rational t(binomial(alpha + n, n - j) * binomial(alpha + j - 1, j) * stirling2(n + j, j));
        t /= Rational(binomial(n + j, j));
        if (j % 2) s -= t;
        else s += t;
    }
    return s;
}

inline Rational bernoulli_poly(long n, const Rational &x)
{
    if (n < 0) throw parameter_error("bernoulli_poly: negative degree");
    auto b = bernoulli_numbers(n);
    // Horner in x over the coefficients binom(n,j) B_{n-j} of x^j.
    Rational r = 0;
    for (long j = n; j >= 0; --j) r = r * x + Rational(binomial(n, j)) * b[static_cast<size_t>(n - j)];
    return r;
}

// beta_m(xi^j), xi = e^{2 pi i/k}. The sum over all k-th roots is valid for any
// power of xi, including xi^j = 1 where it collapses to B_m.
inline CyclotomicElement apostol_bernoulli(long m, long k, long j)
{
    if (m < 0 || k < 1) throw parameter_error("apostol_bernoulli: bad arguments");
    if (mod(j, k) == 0) return CyclotomicElement(k, bernoulli(m));
    std::vector<Rational> v(static_cast<size_t>(k), Rational(0));
    Rational scale(1, k);
    if (m >= 1) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m - 1));
        scale = Rational(p);
    }
    for (long r = 0; r < k; ++r)
        v[static_cast<size_t>(mod(j * r, k))] += scale * bernoulli_poly(m, Rational(r, k));
    return CyclotomicElement(k, std::move(v));
}

// Eulerian polynomial A_m(z), low degree first; A_0 = A_1 = 1.
inline IntPoly eulerian_poly(long m)
{
    if (m < 0) throw parameter_error("eulerian_poly: negative index");
    std::vector<Integer> row{Integer(1)};
    for (long n = 2; n <= m; ++n) {
        std::vector<Integer> next(static_cast<size_t>(n), Integer(0));
        for (long i = 0; i < n; ++i) {
            Integer a = i < n - 1 ? Integer(i + 1) * row[static_cast<size_t>(i)] : Integer(0);
            Integer b = i >= 1 ? Integer(n - i) * row[static_cast<size_t>(i - 1)] : Integer(0);
            next[static_cast<size_t>(i)] = a + b;
        }
        row = std::move(next);
    }
    return row;
}

// Partitions of n into at most N parts (equivalently parts of size <= N).
inline Integer restricted_p(long N, long n)
{
    if (N < 0 || n < 0) throw parameter_error("restricted_p: negative argument");
    std::vector<Integer> t(static_cast<size_t>(n) + 1, Integer(0));
    t[0] = 1;
    for (long part = 1; part <= std::min(N, n); ++part)
        for (long x = part; x <= n; ++x) t[static_cast<size_t>(x)] += t[static_cast<size_t>(x - part)];
    return t[static_cast<size_t>(n)];
}

// p(n) by Euler's pentagonal recurrence; memoized.
inline Integer unrestricted_p(long n)
{
    if (n < 0) return 0;
    static std::mutex mu;
    static std::vector<Integer> t{Integer(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(t.size()) <= n) {
        long x = static_cast<long>(t.size());
        Integer s = 0;
        for (long i = 1;; ++i) {
            long g1 = i * (3 * i - 1) / 2, g2 = i * (3 * i + 1) / 2;
            if (g1 > x) break;
            Integer term = t[static_cast<size_t>(x - g1)];
            if (g2 <= x) term += t[static_cast<size_t>(x - g2)];
            if (i % 2) s += term;
            else s -= term;
        }
        t.push_back(s);
    }
    return t[static_cast<size_t>(n)];
}

} // namespace qexpand

#endif
