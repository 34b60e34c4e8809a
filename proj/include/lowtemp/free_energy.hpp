#ifndef LOWTEMP_FREE_ENERGY_HPP
#define LOWTEMP_FREE_ENERGY_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <mutex>
#include <numbers>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <lowtemp/rational.hpp>
#include <lowtemp/series.hpp>

namespace lowtemp
{

// One term (d1, d2, d3, d4) of the quadruple sum for a_n, with
// d1 + 2 d2 + 3 d3 + 4 d4 = n.
struct QuadrupleTerm {
    std::size_t d1 = 0, d2 = 0, d3 = 0, d4 = 0;

    std::size_t blocks() const { return d1 + d2 + d3 + d4; }
    std::size_t weight() const { return d1 + 2 * d2 + 3 * d3 + 4 * d4; }
    // Power of p = cos t1 + cos t2 carried by the term.
    std::size_t p_power() const { return d1 + d3; }
};

// Calls visit(term) for every quadruple of weight n. When even_p_only is set,
// quadruples with odd d1 + d3 are skipped (their angular integral vanishes).
template <typename Visit>
void for_each_quadruple(std::size_t n, bool even_p_only, Visit &&visit)
{
    for (std::size_t d4 = 0; 4 * d4 <= n; ++d4) {
        for (std::size_t d3 = 0; 4 * d4 + 3 * d3 <= n; ++d3) {
            for (std::size_t d2 = 0; 4 * d4 + 3 * d3 + 2 * d2 <= n; ++d2) {
                const std::size_t d1 = n - 4 * d4 - 3 * d3 - 2 * d2;
                if (even_p_only && (d1 + d3) % 2 != 0) {
                    continue;
                }
                visit(QuadrupleTerm{d1, d2, d3, d4});
            }
        }
    }
}

inline BigInt multinomial(const QuadrupleTerm &t)
{
    const std::size_t k = t.blocks();
    return binomial(k, t.d1) * binomial(k - t.d1, t.d2) * binomial(k - t.d1 - t.d2, t.d3);
}

// Scaled free-energy coefficient a_n / n!, exact.
//
//   a_n/n! = 1/2 sum (d1+d2+d3+d4; d1,d2,d3,d4) (-1)^{d2+d3+d4-1} 2^{d2}
//            / (d1+d2+d3+d4) * C(d1+d3, (d1+d3)/2)^2
//
// over quadruples of weight n with d1 + d3 even; zero for odd n.
inline Rational coeff_a(std::size_t n)
{
    if (n < 1) {
        throw std::invalid_argument("coeff_a: n must be >= 1");
    }
    if (n % 2 != 0) {
        return Rational();
    }
    // Terms grouped by their denominator k = d1+d2+d3+d4 <= n, so the inner
    // loop stays in integer arithmetic. The loops run over p = d1+d3, d3 and
    // d4; then d2 = (n - p - 2 d3)/2 - 2 d4 and the multinomial factors as
    // C(k, p) C(d2+d4, d2) C(p, d1).
    std::vector<std::vector<BigInt>> pascal(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
        pascal[r].resize(r + 1);
        pascal[r][0] = pascal[r][r] = 1;
        for (std::size_t c = 1; c < r; ++c) {
            pascal[r][c] = pascal[r - 1][c - 1] + pascal[r - 1][c];
        }
    }
    std::vector<BigInt> by_blocks(n + 1, 0);
    std::vector<BigInt> weighted(n + 1);
    BigInt term;
    for (std::size_t p = 0; p <= n; p += 2) {
        // weighted[d1] = C(p, d1) C(p, p/2)^2
        const BigInt central = pascal[p][p / 2] * pascal[p][p / 2];
        for (std::size_t d1 = 0; d1 <= p; ++d1) {
            weighted[d1] = pascal[p][d1] * central;
        }
        for (std::size_t d3 = 0; d3 <= p && p + 2 * d3 <= n; ++d3) {
            const std::size_t m = (n - p - 2 * d3) / 2; // d2 + 2 d4
            for (std::size_t d4 = 0; 2 * d4 <= m; ++d4) {
                const std::size_t d2 = m - 2 * d4;
                const std::size_t k = p + d2 + d4;
                mpz_mul(term.get_mpz_t(), pascal[k][p].get_mpz_t(), pascal[d2 + d4][d2].get_mpz_t());
                mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), d2);
                // (-1)^{d2+d3+d4-1}
                if ((d2 + d3 + d4) % 2 == 0) {
                    mpz_submul(by_blocks[k].get_mpz_t(), term.get_mpz_t(), weighted[p - d3].get_mpz_t());
                } else {
                    mpz_addmul(by_blocks[k].get_mpz_t(), term.get_mpz_t(), weighted[p - d3].get_mpz_t());
                }
            }
        }
    }
    Rational total;
    for (std::size_t k = 1; k <= n; ++k) {
        if (by_blocks[k] != 0) {
            total += Rational(by_blocks[k], BigInt(static_cast<unsigned long>(k)));
        }
    }
    return total * Rational(1, 2);
}

// Memoized table of a_n/n! for 1 <= n <= n_max(). Growing the table is
// serialized; reads of already-computed entries may proceed concurrently.
class FreeEnergyCoeffs
{
public:
    FreeEnergyCoeffs() = default;
    explicit FreeEnergyCoeffs(std::size_t n_max) { ensure(n_max); }

    FreeEnergyCoeffs(const FreeEnergyCoeffs &other)
    {
        std::shared_lock lock(other.mutex_);
        scaled_ = other.scaled_;
    }

    std::size_t n_max() const
    {
        std::shared_lock lock(mutex_);
        return scaled_.size();
    }

    // Computes any missing entries up to n_max, distinct n in parallel.
    void ensure(std::size_t n_max)
    {
        std::unique_lock lock(mutex_);
        const std::size_t have = scaled_.size();
        if (n_max <= have) {
            return;
        }
        std::vector<Rational> fresh(n_max - have);
        std::atomic<std::size_t> next{0};
        // Largest n first: cost grows like n^3.
        auto worker = [&] {
            for (std::size_t i = next++; i < fresh.size(); i = next++) {
                const std::size_t idx = fresh.size() - 1 - i;
                fresh[idx] = coeff_a(have + idx + 1);
            }
        };
        const std::size_t threads =
            std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), (fresh.size() + 7) / 8);
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
        pool.clear();
        scaled_.insert(scaled_.end(), fresh.begin(), fresh.end());
    }

    // a_n / n!, 1-indexed.
    Rational scaled(std::size_t n) const
    {
        std::shared_lock lock(mutex_);
        if (n < 1 || n > scaled_.size()) {
            throw std::out_of_range("FreeEnergyCoeffs: entry " + std::to_string(n) + " not computed");
        }
        return scaled_[n - 1];
    }

    // a_n itself.
    Rational unscaled(std::size_t n) const { return scaled(n) * Rational(factorial(n)); }

    // Replaces one entry; used to inject faults in self-tests.
    void override_entry(std::size_t n, const Rational &value)
    {
        ensure(n);
        std::unique_lock lock(mutex_);
        scaled_[n - 1] = value;
    }

private:
    mutable std::shared_mutex mutex_;
    std::vector<Rational> scaled_;
};

// Process-wide table shared by the higher-level modules.
inline FreeEnergyCoeffs &shared_coeffs()
{
    static FreeEnergyCoeffs table;
    return table;
}

// sum_{n=1}^{n_max} (a_n/n!) x^n. The -ln x term of -beta f is not part of
// the series.
inline Series free_energy_series(std::size_t n_max, const FreeEnergyCoeffs &coeffs)
{
    if (n_max < 1) {
        throw std::invalid_argument("free_energy_series: n_max must be >= 1");
    }
    Series s(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        s[n] = coeffs.scaled(n);
    }
    return s;
}

inline Series free_energy_series(std::size_t n_max)
{
    shared_coeffs().ensure(n_max);
    return free_energy_series(n_max, shared_coeffs());
}

// Angular mean of p^l, (1/4 pi^2) int int (cos t1 + cos t2)^l: zero for odd l,
// 2^{-l} C(l, l/2)^2 for even l.
inline Rational integral_p_power(long l)
{
    if (l < 0) {
        throw std::invalid_argument("integral_p_power: l must be >= 0");
    }
    if (l % 2 != 0) {
        return Rational();
    }
    const BigInt c = binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(l / 2));
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(l));
    return Rational(c * c, den);
}

// Same quantity from the cosine-power recursion phi_l = (l-1)/l phi_{l-2}:
// 2^l ((l-1)!!/l!!)^2.
inline Rational integral_p_power_double_factorial(long l)
{
    if (l < 0) {
        throw std::invalid_argument("integral_p_power_double_factorial: l must be >= 0");
    }
    if (l % 2 != 0) {
        return Rational();
    }
    BigInt odd = 1, even = 1;
    for (long i = l - 1; i > 0; i -= 2) {
        odd *= i;
    }
    for (long i = l; i > 0; i -= 2) {
        even *= i;
    }
    BigInt two_l;
    mpz_ui_pow_ui(two_l.get_mpz_t(), 2, static_cast<unsigned long>(l));
    return Rational(two_l * odd * odd, even * even);
}

// Floating-point evaluation of a_n/n! from the unreduced quadruple sum
//
//   a_n/n! = -1/(8 pi^2) sum (-1)^{d2+d3+d4} 2^{d1+d2+d3} / k * multinomial * int int p^{d1+d3}
//
// over all quadruples (odd d1+d3 included), with the double integral taken by
// the periodic trapezoid rule on a points x points grid.
inline double coeff_a_via_integral(std::size_t n, std::size_t points)
{
    if (points < 64) {
        throw std::invalid_argument("coeff_a_via_integral: need at least 64 quadrature points");
    }
    if (n < 1) {
        throw std::invalid_argument("coeff_a_via_integral: n must be >= 1");
    }
    // Quadrature of mean(p^l) for l = 0..n.
    std::vector<double> cosines(points);
    for (std::size_t i = 0; i < points; ++i) {
        cosines[i] = std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(points));
    }
    std::vector<double> mean_p(n + 1, 0.0);
    for (std::size_t i = 0; i < points; ++i) {
        for (std::size_t j = 0; j < points; ++j) {
            const double p = cosines[i] + cosines[j];
            double pl = 1.0;
            for (std::size_t l = 0; l <= n; ++l) {
                mean_p[l] += pl;
                pl *= p;
            }
        }
    }
    for (auto &m : mean_p) {
        m /= static_cast<double>(points * points);
    }
    // int int p^l = 4 pi^2 mean(p^l), so the prefactor 1/(8 pi^2) becomes 1/2.
    double sum = 0.0;
    for_each_quadruple(n, false, [&](const QuadrupleTerm &t) {
        const double sign = (t.d2 + t.d3 + t.d4) % 2 == 0 ? 1.0 : -1.0;
        const double weight =
            std::ldexp(multinomial(t).get_d(), static_cast<int>(t.d1 + t.d2 + t.d3)) / static_cast<double>(t.blocks());
        sum += sign * weight * mean_p[t.p_power()];
    });
    return -0.5 * sum;
}

} // namespace lowtemp

#endif
