#include <catch_amalgamated.hpp>

#include <qexpand/special.hpp>

using namespace qexpand;

namespace
{

bool close(const BigComplex &a, const BigComplex &b, long digits)
{
    Real d = abs(a - b);
    return d.is_zero() || d.log10_abs() < -static_cast<double>(digits);
}

bool close(const Real &a, const Real &b, long digits) { return close(BigComplex(a), BigComplex(b), digits); }

BigComplex cx(const char *re, const char *im) { return {Real(std::string(re)), Real(std::string(im))}; }

// (2 pi + t pi) c with c = Re z0/Im z0 + i
BigComplex segment_point(const SaddleConstants &sc, double t)
{
    Real pi = real_pi();
    BigComplex c(sc.z0.re / sc.z0.im, Real(1L));
    return c * (pi * 2 + pi * Real(t));
}

} // namespace

TEST_CASE("dilogarithm values")
{
    precision_scope scope(60);
    Real pi = real_pi();
    CHECK(li2(BigComplex(Real(0L))).re.is_zero());
    CHECK(close(li2(BigComplex(Real(1L))), BigComplex(pi * pi / 6), 58));
    Real l2 = real_log2();
    CHECK(close(li2(BigComplex(Real(1L) / 2L)), BigComplex(pi * pi / 12 - l2 * l2 / 2), 58));
    // |w| = 1 only at w = 1
    CHECK_THROWS_AS(li2(BigComplex(Real(-1L))), parameter_error);
    CHECK(close(li2(BigComplex(Real(-0.5))) + li2(BigComplex(Real(0.5))), li2(BigComplex(Real(0.25))) / 2L, 58));
    CHECK_THROWS_AS(li2(BigComplex(Real(0.5), Real(0.85))), parameter_error);
}

TEST_CASE("negative order polylogarithms")
{
    precision_scope scope(60);
    BigComplex m1(Real(-1L));
    CHECK(close(polylog_neg(0, m1), BigComplex(Real(-1L) / 2L), 58));
    CHECK(close(polylog_neg(1, m1), BigComplex(Real(-1L) / 4L), 58));
    CHECK_THROWS_AS(polylog_neg(2, BigComplex(Real(1L))), parameter_error);
}

TEST_CASE("negative order polylogarithms match the power series on |w| = 1/2")
{
    precision_scope scope(50);
    for (long t = 0; t < 6; ++t) {
        BigComplex w = root_of_unity(2 * t + 1, 12) / 2L;
        for (long m = 0; m <= 5; ++m) {
            BigComplex sum(Real(0L)), wn(Real(1L));
            for (long n = 1; n <= 260; ++n) {
                wn *= w;
                sum += wn * pow(Real(n), m);
            }
            CHECK(close(polylog_neg(m, w), sum, 45));
        }
    }
}

TEST_CASE("negative order polylogarithms agree with the cotangent form")
{
    precision_scope scope(50);
    BigComplex z(Real(1L), Real(1L));
    // Li_0(e^{-z}) = (i cot(i z / 2) - 1)/2 and Li_{-m}(e^{-z}) = (-d/dz)^m Li_0(e^{-z})
    size_t ord = 6;
    ComplexSeries e = ComplexSeries::exp_linear(z, BigComplex(Real(1L)), ord);
    ComplexSeries cot_part = (e + BigComplex(Real(1L))) / (e - BigComplex(Real(1L))); // i cot(iz/2)
    ComplexSeries li0 = (cot_part - BigComplex(Real(1L))) * BigComplex(Real(1L) / 2L);
    BigComplex w = exp(-z);
    Real fact(1L);
    for (long m = 0; m <= 4; ++m) {
        if (m) fact *= m;
        BigComplex d = li0[static_cast<size_t>(m)] * fact;
        if (m % 2) d = -d;
        CHECK(close(polylog_neg(m, w), d, 40));
    }
}

TEST_CASE("clausen function")
{
    precision_scope scope(60);
    Real pi = real_pi();
    CHECK(clausen(Real(0L)).is_zero());
    CHECK(abs(clausen(pi)).log10_abs() < -55);
    Real catalan(Real::bits_tag{}, working_bits());
    mpfr_const_catalan(catalan.get(), MPFR_RNDN);
    CHECK(close(clausen(pi / 2L), catalan, 57));
    CHECK(close(clausen(-pi / 2L), -catalan, 57));
    CHECK(close(clausen(pi / 2L + pi * 2L), catalan, 55));

    Real th(0.7);
    Real lhs = clausen(th) + clausen(th + pi * 2L / 3L) + clausen(th + pi * 4L / 3L);
    CHECK(close(lhs, clausen(th * 3L) / 3L, 55));
}

TEST_CASE("saddle point")
{
    for (long P : {30L, 60L, 120L}) {
        SaddleConstants sc = find_w0(P);
        CHECK(sc.residual.log10_abs() < -(P - 10));
        precision_scope scope(P);
        CHECK(close(sc.w0, cx("0.91619782", "-0.18245890"), 8));
        CHECK(close(sc.z0, cx("-1.6055276", "7.4234262"), 7));
        CHECK(std::abs(sc.U.to_double() - 0.0680762) < 5e-8);
        CHECK(std::abs(sc.V.to_double() - 0.196576) < 5e-7);
        Real pi = real_pi();
        CHECK(sc.z0.im > pi);
        CHECK(sc.z0.im < pi * 3L);
        BigComplex two_pi_i(Real(0L), pi * 2L);
        CHECK(close(sc.z0 - two_pi_i, log(BigComplex(Real(1L)) - sc.w0), P - 5));
        CHECK(close(BigComplex(sc.U), -log(abs(sc.w0)), P - 5));
    }
    CHECK_THROWS_AS(find_w0(20), parameter_error);
}

TEST_CASE("p series at the saddle")
{
    SaddleConstants sc = find_w0(60);
    precision_scope scope(60);
    ComplexSeries p = p_series_at(sc.z0, 8);
    CHECK(close(p[0], -log(sc.w0), 55));
    CHECK(abs(p[1]).log10_abs() < -55);
    BigComplex p0 = -exp(sc.z0) / (sc.z0 * sc.w0 * 2L);
    CHECK(close(p[2], -p0, 55));
    CHECK(std::abs(abs(p0).to_double() - 0.0142) < 1e-4);
    CHECK_THROWS_AS(p_series_at(BigComplex(Real(0.1), Real(7L)), 4), parameter_error);
}

TEST_CASE("functional equation along the segment through the saddle")
{
    SaddleConstants sc = find_w0(60);
    precision_scope scope(60);
    BigComplex one(Real(1L));
    BigComplex two_pi_i(Real(0L), real_pi() * 2L);
    int used = 0;
    for (int j = 2; j <= 18; ++j) {
        BigComplex z = segment_point(sc, 0.05 * j);
        BigComplex w = one - exp(z);
        if (abs(w).to_double() > li2_radius) continue;
        ++used;
        ComplexSeries p = p_series_at(z, 3);
        BigComplex lhs = z * z * p[1];
        BigComplex rhs = li2(w) - two_pi_i * log(w);
        INFO("t = " << 0.05 * j);
        CHECK(abs(lhs - rhs).log10_abs() < -50);
    }
    CHECK(used >= 5);
}

TEST_CASE("series round trips")
{
    precision_scope scope(60);
    BigComplex c(Real(0.3), Real(-0.2));
    std::vector<BigComplex> a{BigComplex(Real(1.5), Real(0.7)), BigComplex(Real(-0.4), Real(0.2)),
                              BigComplex(Real(0.25)), BigComplex(Real(0.1), Real(-0.3)), BigComplex(Real(-0.05))};
    ComplexSeries s(c, a);
    ComplexSeries back = exp(log(s));
    for (size_t n = 0; n < a.size(); ++n) CHECK(close(back[n], s[n], 52));
    BigComplex tau(Real(3L) / 2L);
    ComplexSeries rt = pow(pow(s, tau), BigComplex(Real(2L) / 3L));
    for (size_t n = 0; n < a.size(); ++n) CHECK(close(rt[n], s[n], 52));
    ComplexSeries one = s * inv(s);
    CHECK(close(one[0], BigComplex(Real(1L)), 55));
    for (size_t n = 1; n < a.size(); ++n) CHECK(abs(one[n]).log10_abs() < -52);
    std::vector<BigComplex> neg{BigComplex(Real(-2L)), BigComplex(Real(1L))};
    CHECK_THROWS_AS(log(ComplexSeries(c, neg)), branch_error);
}

TEST_CASE("bessel kernel")
{
    precision_scope scope(50);
    Real pi = real_pi();
    CHECK(close(bessel_L32(Real(0L)), Real(4L) / (sqrt(pi) * 3L), 48));
    // y = 1: I_{3/2}(2) = sqrt(2/(2 pi)) (cosh 2 - sinh 2 / 2)
    Real x(2L);
    Real i32 = sqrt(2L / (pi * x)) * (cosh(x) - sinh(x) / x);
    CHECK(close(bessel_L32(Real(1L)), i32, 45));
    // y = -4: |y|^{-3/4} J_{3/2}(4), J_{3/2}(x) = sqrt(2/(pi x)) (sin x / x - cos x)
    Real x4(4L);
    Real j32 = sqrt(2L / (pi * x4)) * (sin(x4) / x4 - cos(x4));
    CHECK(close(bessel_L32(Real(-4L)), j32 / pow(Real(4L), Real(3L) / 4L), 45));
}
