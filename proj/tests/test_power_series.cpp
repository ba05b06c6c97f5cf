#include <eulerian/gen_eulerian.hpp>
#include <eulerian/series.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace eulerian;

namespace {

Rat q(long n, long d = 1) { return Rat(BigInt(n), BigInt(d)); }

std::vector<Rat> as_rats(const std::vector<RatFunc>& v) {
    std::vector<Rat> out;
    for (const auto& f : v) out.push_back(f.as_polynomial().coeff(0));
    return out;
}

}  // namespace

TEST(SeriesExp, Examples) {
    EXPECT_EQ(series_exp(Rat(0), 3), Series<Rat>(3, {q(1)}));
    EXPECT_EQ(series_exp(Rat(1), 2), Series<Rat>(2, {q(1), q(1), q(1, 2)}));
    // 2^m / m!
    EXPECT_EQ(series_exp(Rat(2), 2), Series<Rat>(2, {q(1), q(2), q(2)}));
}

TEST(SeriesReciprocal, Examples) {
    EXPECT_EQ(series_reciprocal(Series<Rat>(2, {q(1), q(-1)})), Series<Rat>(2, {q(1), q(1), q(1)}));
    EXPECT_EQ(series_reciprocal(Series<Rat>(1, {q(2)})), Series<Rat>(1, {q(1, 2)}));
    // 1/e^t = e^{-t}
    EXPECT_EQ(series_reciprocal(series_exp(Rat(1), 3)), series_exp(Rat(-1), 3));
    EXPECT_EQ(series_exp(Rat(-1), 3), Series<Rat>(3, {q(1), q(-1), q(1, 2), q(-1, 6)}));
}

TEST(SeriesReciprocal, RejectsNonUnitWithDiagnostic) {
    try {
        series_reciprocal(Series<Rat>(2, {q(0), q(1)}));
        FAIL() << "expected domain_error";
    } catch (const std::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("constant term 0"), std::string::npos) << e.what();
    }
    // (1 - x)/(e^{t(1-x)} - x) at x = 1 has denominator constant 1 - 1 = 0.
    EXPECT_THROW(gf_coefficients_at({GfKind::classical_eulerian}, 3, Rat(1)), std::domain_error);
}

TEST(SeriesReciprocal, InvolutionProperty) {
    oracle::Gen gen(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> c(7);
        for (auto& x : c) x = gen.rat();
        c[0] = gen.nonzero_rat();
        Series<Rat> s(6, c);
        EXPECT_EQ(series_reciprocal(series_reciprocal(s)), s);
        Series<Rat> one = s * series_reciprocal(s);
        EXPECT_EQ(one, Series<Rat>::constant(Rat(1), 6));
    }
    // Same over Q(x).
    Series<RatFunc> s(4, {RatFunc(Poly{q(1), q(-1)}), RatFunc(Poly::variable()), RatFunc(q(3))});
    EXPECT_EQ(series_reciprocal(series_reciprocal(s)), s);
}

TEST(GfCoefficients, NamedNumberExamples) {
    EXPECT_EQ(as_rats(gf_coefficients({GfKind::euler}, 3)), (std::vector<Rat>{q(1), q(-1, 2), q(0), q(1, 4)}));
    EXPECT_EQ(as_rats(gf_coefficients({GfKind::bernoulli}, 2)), (std::vector<Rat>{q(1), q(-1, 2), q(1, 6)}));
    EXPECT_EQ(as_rats(gf_coefficients({GfKind::genocchi}, 2)), (std::vector<Rat>{q(0), q(1), q(-1)}));

    // Independent recurrences.
    const auto e = oracle::euler_convolution(3);
    const auto b = oracle::bernoulli_recurrence(2);
    EXPECT_EQ(gf_coefficients_at({GfKind::euler}, 3, Rat(0)), e);
    EXPECT_EQ(gf_coefficients_at({GfKind::bernoulli}, 2, Rat(0)), b);
}

TEST(GfCoefficients, ClassicalEulerianSymbolic) {
    auto c = gf_coefficients({GfKind::classical_eulerian}, 2);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0], RatFunc(q(1)));
    EXPECT_EQ(c[1], RatFunc(q(-1)));
    EXPECT_EQ(c[2], RatFunc(Poly{q(1), q(1)}));
    // Numeric point agrees with symbolic evaluation.
    auto at = gf_coefficients_at({GfKind::classical_eulerian}, 6, q(1, 3));
    auto sym = gf_coefficients({GfKind::classical_eulerian}, 6);
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(at[n], sym[n].eval(q(1, 3)));
}

TEST(GfCoefficients, BernoulliOddVanishing) {
    auto b = gf_coefficients_at({GfKind::bernoulli}, 15, Rat(0));
    EXPECT_EQ(b[1], q(-1, 2));
    for (unsigned n = 3; n <= 15; n += 2) EXPECT_TRUE(b[n].is_zero()) << n;
    EXPECT_EQ(b, oracle::bernoulli_recurrence(15));
}

TEST(GfCoefficients, EulerMatchesMinusOneSpecialization) {
    auto e = gf_coefficients_at({GfKind::euler}, 12, Rat(0));
    auto m = gf_coefficients_at({GfKind::minus_one}, 12, Rat(0));
    for (unsigned n = 0; n <= 12; ++n) {
        const Rat scaled = e[n] * Rat(ipow(BigInt(2), n));
        EXPECT_EQ(scaled, m[n]) << n;
        EXPECT_EQ(scaled, gen_eulerian(n).coeff.eval(Rat(-1))) << n;
    }
}

TEST(GfCoefficients, GeneralizedDenominatorsCancel) {
    auto c = gf_coefficients({GfKind::generalized}, 12);
    for (unsigned n = 0; n <= 12; ++n) {
        EXPECT_TRUE(c[n].is_polynomial()) << n << ": " << c[n].to_string('a');
        EXPECT_LE(c[n].num().degree(), std::max(0L, static_cast<long>(n) - 1));
    }
}

TEST(GfCoefficients, BernsteinMatchesExpansion) {
    // (t x)^2/2! e^{t(1-x)}: n = 3 coefficient is 3 x^2 (1 - x).
    auto c = gf_coefficients({GfKind::bernstein, 2}, 3);
    EXPECT_TRUE(c[0].is_zero());
    EXPECT_TRUE(c[1].is_zero());
    EXPECT_EQ(c[2], RatFunc(Poly{q(0), q(0), q(1)}));
    EXPECT_EQ(c[3], RatFunc(Poly{q(0), q(0), q(3), q(-3)}));
}

TEST(GfCoefficients, ReturnsRequestedCount) {
    EXPECT_EQ(gf_coefficients({GfKind::euler}, 0).size(), 1u);
    EXPECT_EQ(gf_coefficients_at({GfKind::genocchi}, 9, Rat(0)).size(), 10u);
    EXPECT_EQ(kTruncationGuard, 2u);
}
