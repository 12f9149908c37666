#include <catch_amalgamated.hpp>

#include <qexpand/float_coeffs.hpp>

using namespace qexpand;

namespace
{

double rel_digits(const BigComplex &a, const BigComplex &b)
{
    Real d = abs(a - b);
    if (d.is_zero()) return 1e9;
    return abs(b).log10_abs() - d.log10_abs();
}

} // namespace

TEST_CASE("floating apostol-bernoulli values")
{
    precision_scope scope(80);
    for (long d = 1; d <= 6; ++d)
        for (long a = 0; a < d; ++a) {
            auto b = apostol_bernoulli_float(a, d, 14);
            for (long n = 0; n <= 14; ++n) {
                BigComplex exact = apostol_bernoulli(n, d, a).embed(1) / Real(factorial(static_cast<unsigned long>(n)));
                INFO("a=" << a << " d=" << d << " n=" << n);
                Real diff = abs(b[static_cast<size_t>(n)] - exact);
                CHECK((diff.is_zero() || diff.log10_abs() < -75));
            }
        }
}

TEST_CASE("floating coefficients match the exact engine")
{
    precision_scope scope(90);
    for (long k = 1; k <= 4; ++k)
        for (long h : units_mod(k))
            for (long m = -4; m <= 2; ++m) {
                INFO("k=" << k << " h=" << h << " m=" << m);
                CHECK(rel_digits(a_float(m, k, h, 60), a_exact(m, k, h, 60).embed(1)) > 75);
            }
    CHECK(abs(a_float(-31, 1, 0, 30)).is_zero());
    CHECK_THROWS_AS(a_float(0, 4, 2, 10), parameter_error);
}

TEST_CASE("floating waves match the exact engine")
{
    precision_scope scope(90);
    for (long k = 1; k <= 5; ++k)
        for (long n : {0L, 17L, 40L, 41L}) {
            INFO("k=" << k << " n=" << n);
            CHECK(rel_digits(BigComplex(wave_float(k, 40, n)), BigComplex(Real(wave_exact(k, 40, n)))) > 75);
        }
    CHECK(wave_float(7, 5, 3).is_zero());
}

TEST_CASE("precision doubling")
{
    long calls = 0;
    VerifiedValue v = precision_doubled([&] {
        ++calls;
        return a_float(-1, 1, 0, 400);
    }, 20, 40);
    CHECK(v.agreement >= 20);
    CHECK(calls >= 2);
    precision_scope scope(v.digits);
    CHECK(rel_digits(v.value, a_exact(-1, 1, 0, 400).embed(1)) > 20);

    // a value that never settles
    long t = 0;
    CHECK_THROWS_AS(precision_doubled([&] { return BigComplex(Real(++t)); }, 20, 40, 160), convergence_error);
}
