#include <catch_amalgamated.hpp>

#include <qexpand/complex_series.hpp>
#include <qexpand/laurent.hpp>
#include <qexpand/number_tables.hpp>

using namespace qexpand;

TEST_CASE("bernoulli numbers")
{
    auto b = bernoulli_numbers(12);
    CHECK(b[0] == 1);
    CHECK(b[1] == Rational(-1, 2));
    CHECK(b[2] == Rational(1, 6));
    CHECK(b[3] == 0);
    CHECK(b[12] == Rational(-691, 2730));
    for (long n = 3; n <= 40; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("bernoulli numbers agree with the inverse of (e^z - 1)/z")
{
    long n = 30;
    std::vector<Rational> c;
    for (long j = 0; j <= n; ++j) c.push_back(Rational(1) / Rational(factorial(static_cast<unsigned long>(j + 1))));
    auto inv = laurent_invert(ExactLaurentSeries::from_rationals(0, c, n + 1));
    for (long j = 0; j <= n; ++j)
        CHECK(inv.coefficient(j).rational_value() * Rational(factorial(static_cast<unsigned long>(j))) == bernoulli(j));
}

TEST_CASE("norlund polynomials")
{
    for (long a = -3; a <= 5; ++a) {
        CHECK(norlund(0, a) == 1);
        CHECK(norlund(1, a) == make_rational(-a, 2));
    }
    for (long n = 0; n <= 20; ++n) CHECK(norlund(n, 1) == bernoulli(n));
}

TEST_CASE("norlund polynomials match exp(alpha log(z/(e^z - 1)))")
{
    long n = 12;
    std::vector<Rational> c;
    for (long j = 0; j <= n; ++j) c.push_back(Rational(1) / Rational(factorial(static_cast<unsigned long>(j + 1))));
    auto base = laurent_invert(ExactLaurentSeries::from_rationals(0, c, n + 1));
    auto lg = log_series(base);
    for (long a = -3; a <= 5; ++a) {
        std::vector<CyclotomicElement> sc;
        for (long j = 1; j <= n; ++j) sc.push_back(lg.coefficient(j) * Rational(a));
        auto e = exp_series(ExactLaurentSeries(1, 1, sc, n + 1));
        for (long j = 0; j <= n; ++j)
            CHECK(e.coefficient(j).rational_value() * Rational(factorial(static_cast<unsigned long>(j))) == norlund(j, a));
    }
}

TEST_CASE("stirling numbers of the second kind")
{
    for (long n = 1; n <= 15; ++n) {
        CHECK(stirling2(n, 1) == 1);
        CHECK(stirling2(n, 0) == 0);
        CHECK(stirling2(n, n) == 1);
    }
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(10, 4) == 34105);
}

TEST_CASE("bernoulli polynomials")
{
    for (Rational x : {Rational(0), Rational(1, 3), Rational(-7, 5), Rational(22, 7)}) {
        CHECK(bernoulli_poly(0, x) == 1);
        CHECK(bernoulli_poly(1, x) == x - Rational(1, 2));
    }
    for (long n = 0; n <= 10; ++n)
        for (Rational q : {Rational(1, 3), Rational(2, 7), Rational(-5, 4), Rational(9, 11)}) {
            Rational rhs = bernoulli_poly(n, Rational(1) - q);
            if (n % 2) rhs = -rhs;
            CHECK(bernoulli_poly(n, q) == rhs);
        }
}

TEST_CASE("apostol-bernoulli numbers")
{
    for (long m = 0; m <= 10; ++m) CHECK(apostol_bernoulli(m, 3, 0) == CyclotomicElement(3, bernoulli(m)));
    for (long k = 2; k <= 6; ++k)
        for (long j = 1; j < k; ++j) CHECK(apostol_bernoulli(0, k, j).is_zero());
    CHECK(apostol_bernoulli(1, 2, 1) == CyclotomicElement(2, Rational(-1, 2)));
}

TEST_CASE("apostol-bernoulli numbers match the generating function numerically")
{
    precision_scope scope(60);
    for (long k = 2; k <= 6; ++k) {
        for (long j = 1; j < k; ++j) {
            if (mod(j, k) == 0) continue;
            BigComplex rho = root_of_unity(j, k);
            BigComplex zero(Real(0));
            // 1/(rho e^z - 1) around 0
            std::vector<BigComplex> d;
            BigComplex t = rho;
            for (long n = 0; n <= 9; ++n) {
                if (n) t = t / n;
                d.push_back(n ? t : rho - 1L);
            }
            ComplexSeries inv_d = inv(ComplexSeries(zero, d));
            for (long m = 1; m <= 8; ++m) {
                BigComplex expect = inv_d[static_cast<size_t>(m - 1)] * Real(factorial(static_cast<unsigned long>(m)));
                CHECK(abs(apostol_bernoulli(m, k, j).embed(1) - expect).log10_abs() < -40);
            }
        }
    }
}

TEST_CASE("eulerian polynomials")
{
    CHECK(eulerian_poly(0) == IntPoly{Integer(1)});
    CHECK(eulerian_poly(1) == IntPoly{Integer(1)});
    CHECK(eulerian_poly(2) == (IntPoly{Integer(1), Integer(1)}));
    CHECK(eulerian_poly(3) == (IntPoly{Integer(1), Integer(4), Integer(1)}));
    // A_m(z) = (1-z)^{m+1}/z * sum_n n^m z^n, as a power series
    for (long m = 1; m <= 8; ++m) {
        long L = m + 4;
        std::vector<Integer> s(static_cast<size_t>(L - 1), Integer(0));
        for (long n = 1; n < L; ++n) {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
            s[static_cast<size_t>(n - 1)] = p;
        }
        for (long r = 0; r <= m; ++r) {
            std::vector<Integer> t(s.size(), Integer(0));
            for (size_t i = 0; i < s.size(); ++i) t[i] = s[i] - (i ? s[i - 1] : Integer(0));
            s = t;
        }
        IntPoly a = eulerian_poly(m);
        CHECK(static_cast<long>(a.size()) == m);
        for (size_t i = 0; i < s.size(); ++i) CHECK(s[i] == (i < a.size() ? a[i] : Integer(0)));
    }
}

TEST_CASE("partition counts")
{
    for (long N = 1; N <= 10; ++N) CHECK(restricted_p(N, 0) == 1);
    CHECK(unrestricted_p(5) == 7);
    CHECK(restricted_p(2, 6) == 4);
    CHECK(unrestricted_p(100) == Integer("190569292"));
    for (long n = 0; n <= 60; ++n) {
        CHECK(restricted_p(n + 3, n) == unrestricted_p(n));
        for (long N = 1; N < 12; ++N) CHECK(restricted_p(N, n) <= restricted_p(N + 1, n));
    }
}
