#include <catch_amalgamated.hpp>

#include <qexpand/exact_coeffs.hpp>

using namespace qexpand;

namespace
{

Real embedded_re(const CyclotomicElement &a) { return a.embed(1).re; }

} // namespace

TEST_CASE("power sums by direct summation")
{
    for (long k : {1L, 3L, 5L})
        for (long m : {-3L, 0L, 2L}) {
            long N = 17, M = 6;
            auto S = power_sums(k, m, N, M);
            for (long n = 1; n <= M; ++n)
                for (long r = 0; r < k; ++r) {
                    Integer want = r == 0 ? Integer(m + 1) : Integer(0);
                    for (long j = 1; j <= N; ++j) {
                        if (j % k != r) continue;
                        Integer p;
                        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
                        want += p;
                    }
                    CHECK(S[static_cast<size_t>(n)][static_cast<size_t>(r)] == want);
                }
        }
}

TEST_CASE("oracle on small products")
{
    auto s = laurent_oracle(1, 0, 3, 1);
    std::vector<Rational> want{Rational(-1, 6), Rational(1, 4), Rational(-17, 72), Rational(25, 144), Rational(-91, 864)};
    for (long m = -3; m <= 1; ++m) CHECK(s.coefficient(m).rational_value() == want[static_cast<size_t>(m + 3)]);

    auto one = laurent_oracle(1, 0, 1, 4);
    CHECK(one.coefficient(-1).rational_value() == -1);
    for (long m = 0; m <= 4; ++m) CHECK(one.coefficient(m).is_zero());

    auto two = laurent_oracle(2, 1, 2, 1);
    CHECK(two.coefficient(-1).rational_value() == Rational(1, 4));
    CHECK(two.coefficient(0).rational_value() == Rational(1, 4));
    CHECK(two.coefficient(1).rational_value() == Rational(3, 16));
}

TEST_CASE("log-exp coefficients agree with the oracle on the small grid")
{
    for (long k = 1; k <= 6; ++k)
        for (long N = 1; N <= 20; ++N) {
            long s = N / k;
            for (long h : units_mod(k)) {
                auto o = laurent_oracle(k, h, N, 3);
                for (long m = -s; m <= 3; ++m) {
                    INFO("k=" << k << " h=" << h << " N=" << N << " m=" << m);
                    CHECK(a_exact(m, k, h, N) == o.coefficient(m));
                }
                CHECK(a_exact(-s - 1, k, h, N).is_zero());
            }
        }
}

TEST_CASE("coefficients at roots of unity of order N")
{
    CHECK(rademacher_c(1, 5, 1, 5) == CyclotomicElement::xi_power(5, 1) * Rational(-1, 25));
    for (long N = 2; N <= 12; ++N)
        for (long h : units_mod(N))
            CHECK(rademacher_c(h, N, 1, N) == CyclotomicElement::xi_power(N, h) * -Rational(1, N * N));
    CHECK(rademacher_c(0, 1, 2, 3) == CyclotomicElement(1, Rational(1, 4)));
    CHECK(rademacher_c(0, 1, 1, 3) == CyclotomicElement(1, Rational(-17, 72)));
    CHECK(rademacher_c(1, 3, 3, 7).is_zero());
    CHECK(rademacher_c(1, 2, 4, 7).is_zero());
    CHECK_THROWS_AS(rademacher_c(0, 1, 0, 5), parameter_error);
    CHECK_THROWS_AS(a_exact(0, 4, 2, 8), parameter_error);
}

TEST_CASE("conjugation maps h to k - h")
{
    for (long k = 3; k <= 9; ++k)
        for (long h : units_mod(k))
            for (long m = -2; m <= 2; ++m) CHECK(a_exact(m, k, h, 23).conj() == a_exact(m, k, k - h, 23));
}

TEST_CASE("published rademacher coefficient samples")
{
    precision_scope scope(40);
    // 100 C_{014}(N)
    auto scaled = [](long N) { return (embedded_re(rademacher_c(0, 1, 4, N)) * 100L).to_double(); };
    CHECK(std::abs(scaled(7) - 3.7269) < 5e-5);
    CHECK(std::abs(scaled(17) - 3.1461) < 5e-5);
    CHECK(std::abs(scaled(200) - 3.7845) < 5e-5);
}

TEST_CASE("sylvester waves")
{
    CHECK(wave_exact(2, 5, 60) == Rational(135, 128));
    CHECK(wave_exact(3, 5, 60) == Rational(2, 27));
    CHECK(wave_exact(4, 5, 60) == Rational(1, 16));
    CHECK(wave_exact(5, 5, 60) == Rational(4, 25));
    CHECK(wave_exact(6, 5, 60) == 0);
    CHECK_THROWS_AS(wave_exact(0, 5, 3), parameter_error);
}

TEST_CASE("waves reconstruct restricted partitions")
{
    for (long N = 1; N <= 8; ++N)
        for (long n = 0; n <= 40; ++n) {
            Rational total(0);
            for (long k = 1; k <= N; ++k) total += wave_exact(k, N, n);
            INFO("N=" << N << " n=" << n);
            CHECK(total == Rational(restricted_p(N, n)));
        }
}

TEST_CASE("waves are polynomials of degree below floor(N/k) on residue classes")
{
    for (long N : {6L, 9L, 11L})
        for (long k = 1; k <= 4; ++k) {
            long s = N / k;
            for (long n0 = 0; n0 < k; ++n0) {
                std::vector<Rational> v;
                for (long j = 0; j <= s + 2; ++j) v.push_back(wave_exact(k, N, n0 + k * j));
                for (long d = 0; d < s; ++d)
                    for (size_t i = 0; i + 1 < v.size() - static_cast<size_t>(d); ++i) v[i] = v[i + 1] - v[i];
                for (size_t i = 0; i + static_cast<size_t>(s) < v.size(); ++i) CHECK(v[i] == 0);
            }
        }
}

TEST_CASE("partial fraction identity")
{
    precision_scope scope(60);
    mpfr_prec_t bits = working_bits();
    auto pass = [&](const Real &r) { return r.is_zero() || r.log10_abs() < -50; };
    BigComplex third(Real(Real::bits_tag{}, bits) + 1);
    third /= 3L;
    CHECK(pass(partial_fraction_check(4, third)));
    BigComplex q2(Real(Real::bits_tag{}, bits) + 2, Real(Real::bits_tag{}, bits) + 1);
    CHECK(pass(partial_fraction_check(6, q2)));
    BigComplex five(Real(Real::bits_tag{}, bits) + 5);
    CHECK(pass(partial_fraction_check(1, five)));
    // 1/(1 - 5) = -C_{011}(1)/(5 - 1)
    CHECK(rademacher_c(0, 1, 1, 1).rational_value() == -1);
    // expansion at infinity: points on |q| = 3
    for (long N = 1; N <= 6; ++N)
        for (long t = 0; t < 8; ++t) {
            BigComplex q = root_of_unity(2 * t + 1, 16, bits) * 3L;
            CHECK(pass(partial_fraction_check(N, q)));
        }
}
