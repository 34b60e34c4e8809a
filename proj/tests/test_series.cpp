#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include <lowtemp/bell.hpp>
#include <lowtemp/rational.hpp>
#include <lowtemp/series.hpp>

using lowtemp::Rational;
using lowtemp::Series;

namespace
{

Rational q(const char *s) { return Rational::parse(s); }

Series random_series(std::mt19937_64 &rng, std::size_t order, bool zero_constant)
{
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
    Series s(order);
    for (std::size_t i = zero_constant ? 1 : 0; i <= order; ++i) {
        s[i] = Rational(num(rng), den(rng));
    }
    return s;
}

} // namespace

TEST(Rational, LowestTermsAndSign)
{
    const Rational r(6, -8);
    EXPECT_EQ(r.to_string(), "-3/4");
    EXPECT_EQ(r.denominator(), 4);
    EXPECT_EQ(Rational(10, 5).to_string(), "2");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(), std::domain_error);
}

TEST(Rational, ParsesFractionsAndDecimalsFromDigits)
{
    EXPECT_EQ(q("9/25"), Rational(9, 25));
    EXPECT_EQ(q("0.36"), Rational(9, 25));
    EXPECT_EQ(q(" 112/3 "), Rational(112, 3));
    EXPECT_EQ(q("-1.25e-1"), Rational(-1, 8));
    EXPECT_EQ(q("3e2"), Rational(300));
    EXPECT_EQ(q("+7"), Rational(7));
    for (const char *bad : {"", "abc", "1/", "/2", "1.2.3", "0.3x", "--1", "1e", "."}) {
        EXPECT_THROW(q(bad), std::invalid_argument) << bad;
    }
    EXPECT_THROW(q("1/0"), std::domain_error);
}

TEST(Rational, CanonicalTextReparsesToItself)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-100000, 100000);
    for (int i = 0; i < 200; ++i) {
        long den = d(rng);
        if (den == 0) {
            den = 1;
        }
        const Rational r(d(rng), den);
        EXPECT_EQ(Rational::parse(r.to_string()).to_string(), r.to_string());
    }
}

TEST(Series, AddExamples)
{
    EXPECT_EQ(Series({1, 1}) + Series({0, 0}), Series({1, 1}));
    const Series truncated = Series({1, 1}) + Series({0, 0, 1});
    EXPECT_EQ(truncated.order(), 1u);
    EXPECT_EQ(truncated, Series({1, 1}));
    const Series x4 = Series::monomial(1, 4, 6);
    const Series x6 = Series::monomial(2, 6, 6);
    EXPECT_EQ(x4 + x6, Series({0, 0, 0, 0, 1, 0, 2}));
}

TEST(Series, MulExamples)
{
    EXPECT_EQ(Series({1, 1}) * Series({1, -1}), Series({1, 0}));
    EXPECT_EQ(Series({1, 1, 0}) * Series({1, -1, 0}), Series({1, 0, -1}));
    const Series s({3, q("1/2"), -4});
    EXPECT_EQ(Series({1, 0, 0}) * s, s);
    EXPECT_EQ(Series::monomial(1, 4, 8) * Series::monomial(1, 4, 8), Series::monomial(1, 8, 8));
}

TEST(Series, ExpExamples)
{
    EXPECT_EQ(lowtemp::exp(Series(5)), Series({1, 0, 0, 0, 0, 0}));

    Series f(12);
    f[4] = 1;
    f[6] = 2;
    f[8] = q("9/2");
    f[10] = 12;
    f[12] = q("112/3");
    Series z(12);
    z[0] = 1;
    z[4] = 1;
    z[6] = 2;
    z[8] = 5;
    z[10] = 14;
    z[12] = 44;
    EXPECT_EQ(lowtemp::exp(f), z);

    EXPECT_EQ(lowtemp::exp(Series({0, 1, 0, 0, 0})), Series({1, 1, q("1/2"), q("1/6"), q("1/24")}));
    EXPECT_THROW(lowtemp::exp(Series({1, 1})), std::domain_error);
}

TEST(Series, LogExamples)
{
    EXPECT_EQ(lowtemp::log(Series({1, 0, 0})), Series(2));
    Series z(8);
    z[0] = 1;
    z[4] = 1;
    z[6] = 2;
    z[8] = 5;
    Series f(8);
    f[4] = 1;
    f[6] = 2;
    f[8] = q("9/2");
    EXPECT_EQ(lowtemp::log(z), f);
    EXPECT_THROW(lowtemp::log(Series({2, 1})), std::domain_error);
    EXPECT_THROW(lowtemp::log(Series({0, 1})), std::domain_error);
}

TEST(SeriesProperty, LogInvertsExpUpToOrder40)
{
    std::mt19937_64 rng(42);
    for (std::size_t order : {1u, 5u, 17u, 40u}) {
        for (int trial = 0; trial < 4; ++trial) {
            const Series s = random_series(rng, order, true);
            EXPECT_EQ(lowtemp::log(lowtemp::exp(s)), s) << "order " << order;
        }
    }
}

TEST(SeriesProperty, RingAxiomsUpToOrder16)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t order = 1 + trial % 16;
        const Series a = random_series(rng, order, false);
        const Series b = random_series(rng, order, false);
        const Series c = random_series(rng, order, false);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
    }
}

TEST(SeriesProperty, ExpMatchesCompleteBellSum)
{
    // exp(sum a_n x^n/n!) = 1 + sum Y_N(a) x^N / N!
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    constexpr std::size_t order = 14;
    lowtemp::CoeffSequence<Rational> a;
    Series f(order);
    for (std::size_t n = 1; n <= order; ++n) {
        a.push_back(Rational(num(rng), den(rng)));
        f[n] = a[n] / Rational(lowtemp::factorial(n));
    }
    const Series e = lowtemp::exp(f);
    for (std::size_t N = 0; N <= order; ++N) {
        EXPECT_EQ(e[N], lowtemp::complete_bell(N, a) / Rational(lowtemp::factorial(N))) << N;
    }
}

TEST(SeriesProperty, ExpMatchesBellForFreeEnergyToOrder30)
{
    // Same identity at larger order with sparse coefficients like the free energy.
    constexpr std::size_t order = 30;
    lowtemp::CoeffSequence<Rational> a;
    Series f(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const Rational scaled = n % 2 == 0 && n >= 4 ? Rational(static_cast<long>(n), 3) : Rational();
        f[n] = scaled;
        a.push_back(scaled * Rational(lowtemp::factorial(n)));
    }
    const Series e = lowtemp::exp(f);
    for (std::size_t N = 20; N <= order; N += 5) {
        EXPECT_EQ(e[N], lowtemp::complete_bell(N, a) / Rational(lowtemp::factorial(N))) << N;
    }
}
