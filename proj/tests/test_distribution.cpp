#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include <lowtemp/bell.hpp>
#include <lowtemp/distribution.hpp>

#include "oracles.hpp"

using lowtemp::Rational;

namespace
{

const Rational kX036(9, 25);

} // namespace

TEST(Distribution, CriticalPointTestIsExact)
{
    EXPECT_FALSE(lowtemp::at_or_above_critical(kX036));
    EXPECT_FALSE(lowtemp::at_or_above_critical(Rational(41, 100)));
    EXPECT_FALSE(lowtemp::at_or_above_critical(Rational(41421356, 100000000)));
    EXPECT_TRUE(lowtemp::at_or_above_critical(Rational(41421357, 100000000)));
    EXPECT_TRUE(lowtemp::at_or_above_critical(Rational(1, 2)));
    EXPECT_NEAR(lowtemp::kCriticalX, 0.41421356237, 1e-10);
}

TEST(Distribution, ExactAtXNineTwentyFifths)
{
    const auto t = lowtemp::energy_distribution_exact(kX036, 1e-8);
    EXPECT_EQ(t.x, kX036);
    ASSERT_FALSE(t.rows.empty());
    EXPECT_EQ(t.rows.size(), t.truncation_N + 1);
    EXPECT_LT(t.tail_bound, 1e-8);
    EXPECT_NEAR(t.total(), 1.0, 1e-12);
    for (const auto &row : t.rows) {
        EXPECT_GE(row.P, 0.0);
        EXPECT_LE(row.P, 1.0);
        if (row.N % 2 != 0 || row.N == 2) {
            EXPECT_EQ(row.P, 0.0) << row.N;
        }
    }
    EXPECT_NEAR(t.rows[0].P, 0.97706720690285, 1e-12);
    EXPECT_NEAR(t.rows[4].P, 0.01641097713789337, 1e-12);
}

TEST(DistributionProperty, EvenRestrictionIsUnimodalOverSupport)
{
    for (const Rational &x : {Rational(1, 10), Rational(9, 25), Rational(2, 5)}) {
        const auto t = lowtemp::energy_distribution_exact(x, 1e-8);
        // Support is N = 0 and even N >= 4; find the peak and check monotone on each side.
        std::vector<double> p;
        p.push_back(t.rows[0].P);
        for (std::size_t N = 4; N < t.rows.size(); N += 2) {
            p.push_back(t.rows[N].P);
        }
        std::size_t peak = 0;
        for (std::size_t i = 1; i < p.size(); ++i) {
            if (p[i] > p[peak]) {
                peak = i;
            }
        }
        for (std::size_t i = 1; i <= peak; ++i) {
            EXPECT_LE(p[i - 1], p[i]) << x << " i=" << i;
        }
        for (std::size_t i = peak + 1; i < p.size(); ++i) {
            EXPECT_GE(p[i - 1], p[i]) << x << " i=" << i;
        }
    }
}

TEST(Distribution, SmallTemperatureConcentratesOnGroundState)
{
    const auto t = lowtemp::energy_distribution_exact(Rational(1, 1000), 1e-12);
    EXPECT_NEAR(t.rows[0].P, 1.0, 1e-11);
    for (std::size_t N = 1; N < t.rows.size(); ++N) {
        EXPECT_LT(t.rows[N].P, 1e-11);
    }
}

TEST(Distribution, ExactRejectsBadInput)
{
    EXPECT_THROW(lowtemp::energy_distribution_exact(Rational(1, 2), 1e-8), std::domain_error);
    EXPECT_THROW(lowtemp::energy_distribution_exact(Rational(41422, 100000), 1e-8), std::domain_error);
    EXPECT_THROW(lowtemp::energy_distribution_exact(Rational(), 1e-8), std::invalid_argument);
    EXPECT_THROW(lowtemp::energy_distribution_exact(kX036, 0.0), std::invalid_argument);
    EXPECT_THROW(lowtemp::energy_distribution_exact(Rational(41, 100), 1e-8, 64), std::runtime_error);
}

TEST(Distribution, TighterToleranceKeepsMoreTerms)
{
    const auto loose = lowtemp::energy_distribution_exact(kX036, 1e-4);
    const auto tight = lowtemp::energy_distribution_exact(kX036, 1e-12);
    EXPECT_LT(loose.truncation_N, tight.truncation_N);
    EXPECT_LT(loose.tail_bound, 1e-4);
    EXPECT_LT(tight.tail_bound, 1e-12);
    EXPECT_NEAR(loose.rows[0].P, tight.rows[0].P, 1e-4);
}

TEST(Confluent, Examples)
{
    for (double C : {0.0, 0.5, 3.0}) {
        EXPECT_DOUBLE_EQ(lowtemp::confluent_1f1_truncated(1, C), 1.0);
        EXPECT_DOUBLE_EQ(lowtemp::confluent_1f1_truncated(2, C), 1.0 + C / 2.0);
    }
    EXPECT_NEAR(lowtemp::confluent_1f1_truncated(6, 1.0), oracle::hypergeometric_1f1_pochhammer(6, 1.0), 1e-13);
    EXPECT_EQ(lowtemp::confluent_1f1_truncated(3, Rational(2)), Rational(1) + Rational(2) + Rational(4, 6));
    EXPECT_THROW(lowtemp::confluent_1f1_truncated(0, 1.0), std::invalid_argument);
}

TEST(ConfluentProperty, UnitAtZeroArgument)
{
    for (std::size_t N = 1; N <= 60; ++N) {
        EXPECT_EQ(lowtemp::confluent_1f1_truncated(N, 0.0), 1.0);
        EXPECT_EQ(lowtemp::confluent_1f1_truncated(N, Rational()), Rational(1));
    }
}

TEST(ConfluentProperty, AgreesWithPochhammerSumTo12Digits)
{
    for (std::size_t N = 1; N <= 50; ++N) {
        for (double C : {0.01, 0.3, 1.0, 2.5, 7.0, 10.0}) {
            const double ref = oracle::hypergeometric_1f1_pochhammer(N, C);
            EXPECT_NEAR(lowtemp::confluent_1f1_truncated(N, C) / ref, 1.0, 1e-12) << N << " " << C;
        }
    }
}

TEST(ConfluentProperty, ExactAndFloatingEvaluationsAgree)
{
    for (std::size_t N = 1; N <= 30; ++N) {
        const Rational C(7, 3);
        EXPECT_NEAR(lowtemp::confluent_1f1_truncated(N, C).to_double() / lowtemp::confluent_1f1_truncated(N, 7.0 / 3.0),
                    1.0, 1e-13)
            << N;
    }
}

TEST(Asymptotic, NormalizationAndLimits)
{
    const auto one = lowtemp::energy_distribution_asymptotic(0.2, 0.7, 1);
    ASSERT_EQ(one.rows.size(), 2u);
    EXPECT_NEAR(one.rows[0].P + one.rows[1].P, 1.0, 1e-15);

    const auto cold = lowtemp::energy_distribution_asymptotic(1e-9, 0.01, 40);
    EXPECT_NEAR(cold.rows[0].P, 1.0, 1e-6);

    const auto t = lowtemp::energy_distribution_asymptotic(0.36, 0.0035, 200);
    EXPECT_NEAR(t.total(), 1.0, 1e-12);
    for (const auto &row : t.rows) {
        EXPECT_GE(row.P, 0.0);
    }

    const auto no_ground = lowtemp::energy_distribution_asymptotic(0.36, 0.0035, 200, false);
    EXPECT_EQ(no_ground.rows.front().N, 1u);
    EXPECT_NEAR(no_ground.total(), 1.0, 1e-12);

    EXPECT_THROW(lowtemp::energy_distribution_asymptotic(0.5, 1.0, 10), std::domain_error);
    EXPECT_THROW(lowtemp::energy_distribution_asymptotic(0.2, 0.0, 10), std::invalid_argument);
}

TEST(Asymptotic, RefinedAmplitudeReproducesExactGroundState)
{
    const auto exact = lowtemp::energy_distribution_exact(kX036, 1e-12);
    const double exact_sum = 1.0 / exact.rows[0].P;
    const double C = lowtemp::refine_amplitude(0.36, exact_sum);
    EXPECT_NEAR(C, 0.0034937, 1e-6);
    EXPECT_NEAR(lowtemp::asymptotic_partition_sum(0.36 / lowtemp::kCriticalX, C), exact_sum, 1e-12);
    const auto asym = lowtemp::energy_distribution_asymptotic(0.36, C, 400);
    EXPECT_NEAR(asym.rows[0].P, exact.rows[0].P, 1e-9);
    EXPECT_THROW(lowtemp::refine_amplitude(0.36, 0.5), std::invalid_argument);
    EXPECT_THROW(lowtemp::refine_amplitude(0.5, 2.0), std::invalid_argument);
}

TEST(AsymptoticProperty, ClosedFormSumMatchesTermwiseSum)
{
    for (double r : {0.1, 0.5, 0.869}) {
        for (double C : {0.003, 0.5, 2.0}) {
            double sum = 0.0, rN = 1.0;
            for (std::size_t N = 1; N <= 3000; ++N) {
                rN *= r;
                sum += rN * lowtemp::confluent_1f1_truncated(N, C);
            }
            EXPECT_NEAR(lowtemp::asymptotic_partition_sum(r, C) / (1.0 + C * sum), 1.0, 1e-12) << r << " " << C;
        }
    }
    EXPECT_THROW(lowtemp::asymptotic_partition_sum(1.0, 1.0), std::domain_error);
}

TEST(Fit, TheoreticalSlopeAndOrdering)
{
    const double limit = std::log10(1.0 + std::numbers::sqrt2);
    EXPECT_NEAR(limit, 0.3828, 5e-5);
    EXPECT_NEAR(std::log10(1.0 / lowtemp::kCriticalX), limit, 1e-14);

    const auto low = lowtemp::fit_asymptotic_growth(8, 24);
    const auto high = lowtemp::fit_asymptotic_growth(24, 40);
    EXPECT_LT(std::abs(high.slope_log10 - limit), std::abs(low.slope_log10 - limit));
    EXPECT_EQ(low.points, 9u);
    EXPECT_EQ(high.points, 9u);
}

TEST(FitProperty, SlopeIncreasesTowardLimitWithWindow)
{
    const double limit = std::log10(1.0 + std::numbers::sqrt2);
    double previous = 0.0;
    for (std::size_t lo : {8u, 24u, 40u, 60u, 80u}) {
        const auto fit = lowtemp::fit_asymptotic_growth(lo, lo + 20);
        EXPECT_GT(fit.slope_log10, previous) << lo;
        EXPECT_LT(fit.slope_log10, limit) << lo;
        EXPECT_NEAR(std::log10(fit.alpha_estimate), fit.slope_log10, 1e-12);
        EXPECT_NEAR(std::log10(fit.C_estimate), fit.intercept_log10, 1e-12);
        previous = fit.slope_log10;
    }
}

TEST(Fit, RejectsBadWindows)
{
    EXPECT_THROW(lowtemp::fit_asymptotic_growth(2, 20), std::invalid_argument);
    EXPECT_THROW(lowtemp::fit_asymptotic_growth(8, 8), std::invalid_argument);
    EXPECT_THROW(lowtemp::fit_asymptotic_growth(7, 20), std::invalid_argument);
    EXPECT_THROW(lowtemp::fit_asymptotic_growth(8, 10), std::invalid_argument);
}

TEST(Fit, Log10OfHugeRationals)
{
    const Rational big(lowtemp::factorial(300), lowtemp::BigInt(7));
    EXPECT_NEAR(lowtemp::log10_rational(big), std::lgamma(301.0) / std::log(10.0) - std::log10(7.0), 1e-9);
    EXPECT_THROW(lowtemp::log10_rational(Rational()), std::domain_error);
}

TEST(Preference, Examples)
{
    const auto pref = lowtemp::preference_sequence(kX036, 40);
    ASSERT_EQ(pref.size(), 40u);
    for (std::size_t n = 1; n <= 40; n += 2) {
        EXPECT_TRUE(pref[n - 1].is_zero()) << n;
    }
    EXPECT_EQ(pref[3], pow(kX036, 4));
    // Tail ratios of consecutive nonzero even entries fall below one.
    for (std::size_t n = 24; n + 2 <= 40; n += 2) {
        EXPECT_LT(pref[n + 1] / pref[n - 1], Rational(1)) << n;
    }
    for (const auto &v : lowtemp::preference_sequence(Rational(), 10)) {
        EXPECT_TRUE(v.is_zero());
    }
    EXPECT_THROW(lowtemp::preference_sequence(kX036, 0), std::invalid_argument);
}

TEST(Preference, AboveCriticalTailGrows)
{
    const auto pref = lowtemp::preference_sequence(Rational(1, 2), 60);
    EXPECT_GT(pref[59] / pref[57], Rational(1));
}

TEST(DistributionProperty, LahReductionIdentityExact)
{
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> num(1, 9), den(1, 9);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational C(num(rng), den(rng));
        const Rational r(num(rng), den(rng) + 9);
        lowtemp::CoeffSequence<Rational> a;
        for (std::size_t n = 1; n <= 20; ++n) {
            a.push_back(C * pow(r, n) * Rational(lowtemp::factorial(n)));
        }
        for (std::size_t N = 1; N <= 20; N += (N < 8 ? 1 : 4)) {
            const Rational lhs = lowtemp::complete_bell(N, a) / Rational(lowtemp::factorial(N));
            Rational rhs;
            for (std::size_t k = 1; k <= N; ++k) {
                rhs += Rational(lowtemp::binomial(N - 1, k - 1)) * pow(C, k) / Rational(lowtemp::factorial(k));
            }
            EXPECT_EQ(lhs, pow(r, N) * rhs) << "trial " << trial << " N=" << N;
        }
    }
}
