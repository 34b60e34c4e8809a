#ifndef LOWTEMP_DISTRIBUTION_HPP
#define LOWTEMP_DISTRIBUTION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <lowtemp/free_energy.hpp>
#include <lowtemp/partition.hpp>
#include <lowtemp/rational.hpp>

namespace lowtemp
{

// Critical point x_c = exp(-2J/kT_c) = sqrt(2) - 1.
inline constexpr double kCriticalX = std::numbers::sqrt2 - 1.0;

// Exact test of x >= sqrt(2) - 1 for x > 0, i.e. (x + 1)^2 >= 2.
inline bool at_or_above_critical(const Rational &x)
{
    const Rational shifted = x + Rational(1);
    return shifted * shifted >= Rational(2);
}

struct DistributionRow {
    std::size_t N = 0;
    double P = 0.0;
};

// Energy distribution P(N, x) at a fixed temperature variable x.
struct DistributionTable {
    Rational x;
    std::vector<DistributionRow> rows;
    // Largest N included.
    std::size_t truncation_N = 0;
    // Bound on the omitted tail relative to the retained partial sum.
    double tail_bound = 0.0;

    double total() const
    {
        double s = 0.0;
        for (const auto &r : rows) {
            s += r.P;
        }
        return s;
    }
};

// Terms a_n x^n / n! for 1 <= n <= n_max (entry i holds n = i + 1).
inline std::vector<Rational> preference_sequence(const Rational &x, std::size_t n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("preference_sequence: n_max must be >= 1");
    }
    shared_coeffs().ensure(n_max);
    std::vector<Rational> out;
    out.reserve(n_max);
    Rational xn = x;
    for (std::size_t n = 1; n <= n_max; ++n) {
        out.push_back(shared_coeffs().scaled(n) * xn);
        xn *= x;
    }
    return out;
}

// P(N, x) = g(N) x^N / sum_M g(M) x^M, truncated once the geometric tail
// estimate anchored at the last retained term falls below tol times the partial
// sum. The ratio is rho = max((1+sqrt 2) x, sqrt(t_N / t_{N-2})); term ratios
// approach (1+sqrt 2)^2 x^2 from below, so the bound is conservative.
// Probabilities are formed exactly and rounded once.
inline DistributionTable energy_distribution_exact(const Rational &x, double tol, std::size_t max_N = 1024)
{
    if (x.sign() <= 0) {
        throw std::invalid_argument("energy_distribution_exact: x must be positive");
    }
    if (at_or_above_critical(x)) {
        throw std::domain_error("energy_distribution_exact: x = " + x.to_string() +
                                " is at or above x_c = sqrt(2) - 1; the series tail is not certified there");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("energy_distribution_exact: tol must be positive");
    }
    const double rho_limit = (1.0 + std::numbers::sqrt2) * x.to_double();

    std::size_t chunk = 64;
    std::vector<Rational> terms;
    Rational partial;
    std::size_t stop = 0;
    double tail = 0.0;
    while (stop == 0) {
        chunk = std::min(chunk, max_N);
        const DensityOfStates dos = dos_infinite(chunk, false);
        Rational xn(1);
        terms.clear();
        partial = Rational();
        for (std::size_t N = 0; N <= chunk; ++N) {
            terms.push_back(dos[N] * xn);
            partial += terms.back();
            xn *= x;
            // Need two nonzero even terms to estimate the local ratio.
            if (N % 2 != 0 || N < 6 || terms[N].is_zero() || terms[N - 2].is_zero()) {
                continue;
            }
            const double local = std::sqrt((terms[N] / terms[N - 2]).to_double());
            const double rho = std::max(rho_limit, local);
            if (rho >= 1.0) {
                continue;
            }
            tail = (terms[N] / partial).to_double() * rho * rho / (1.0 - rho * rho);
            if (tail < tol) {
                stop = N;
                break;
            }
        }
        if (stop == 0) {
            if (chunk >= max_N) {
                throw std::runtime_error("energy_distribution_exact: tail bound not below tol within N <= " +
                                         std::to_string(max_N));
            }
            chunk *= 2;
        }
    }
    DistributionTable table;
    table.x = x;
    table.truncation_N = stop;
    table.tail_bound = tail;
    for (std::size_t N = 0; N <= stop; ++N) {
        table.rows.push_back({N, (terms[N] / partial).to_double()});
    }
    return table;
}

// Coefficients of 1F1(1-N; 2; -C) as a polynomial in C: C(N-1, l) / (l+1)!.
inline std::vector<Rational> confluent_1f1_coefficients(std::size_t N)
{
    if (N < 1) {
        throw std::invalid_argument("confluent_1f1: N must be >= 1");
    }
    std::vector<Rational> c;
    c.reserve(N);
    for (std::size_t l = 0; l < N; ++l) {
        c.emplace_back(binomial(N - 1, l), factorial(l + 1));
    }
    return c;
}

// 1F1(1-N; 2; -C) exactly, for rational C.
inline Rational confluent_1f1_truncated(std::size_t N, const Rational &C)
{
    const auto coeffs = confluent_1f1_coefficients(N);
    Rational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * C + *it;
    }
    return acc;
}

// 1F1(1-N; 2; -C); the series terminates after N terms. Evaluated term by term
// with t_{l+1} = t_l (N-1-l) C / ((l+1)(l+2)), all terms positive for C >= 0.
inline double confluent_1f1_truncated(std::size_t N, double C)
{
    if (N < 1) {
        throw std::invalid_argument("confluent_1f1: N must be >= 1");
    }
    double term = 1.0, sum = 1.0;
    for (std::size_t l = 0; l + 1 < N; ++l) {
        term *= static_cast<double>(N - 1 - l) * C / (static_cast<double>(l + 1) * static_cast<double>(l + 2));
        sum += term;
    }
    return sum;
}

// Closed-form approximation
//   P(N, x) ~ r^N 1F1(1-N; 2; -C) / (C^-1 + sum_{M=1}^{N_max} r^M 1F1(1-M; 2; -C)),  r = x/x_c,
// with P(0) = C^-1 / denominator. When include_ground is false the C^-1 term
// and the N = 0 row are dropped.
inline DistributionTable energy_distribution_asymptotic(double x, double C, std::size_t N_max,
                                                        bool include_ground = true)
{
    if (!(x > 0.0) || !(x < kCriticalX)) {
        throw std::domain_error("energy_distribution_asymptotic: need 0 < x < x_c");
    }
    if (!(C > 0.0)) {
        throw std::invalid_argument("energy_distribution_asymptotic: C must be positive");
    }
    const double r = x / kCriticalX;
    std::vector<double> weights;
    weights.push_back(include_ground ? 1.0 / C : 0.0);
    double rN = 1.0;
    for (std::size_t N = 1; N <= N_max; ++N) {
        rN *= r;
        weights.push_back(rN * confluent_1f1_truncated(N, C));
    }
    double denom = 0.0;
    for (double w : weights) {
        denom += w;
    }
    DistributionTable table;
    table.x = Rational::from_mpq(mpq_class(x));
    table.truncation_N = N_max;
    for (std::size_t N = include_ground ? 0 : 1; N <= N_max; ++N) {
        table.rows.push_back({N, weights[N] / denom});
    }
    return table;
}

// 1 + C sum_{N>=1} r^N 1F1(1-N; 2; -C), the asymptotic form of sum g(N) x^N.
// Summing sum_N C(N-1, l) r^N = (r/(1-r))^{l+1} inside the 1F1 polynomial
// collapses the whole sum to exp(C r / (1 - r)).
inline double asymptotic_partition_sum(double r, double C)
{
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("asymptotic_partition_sum: need 0 <= r < 1");
    }
    return std::exp(C * r / (1.0 - r));
}

// Solves asymptotic_partition_sum(x/x_c, C) = exact_sum for C.
inline double refine_amplitude(double x, double exact_sum)
{
    if (!(x > 0.0 && x < kCriticalX) || !(exact_sum > 1.0)) {
        throw std::invalid_argument("refine_amplitude: need 0 < x < x_c and exact_sum > 1");
    }
    const double r = x / kCriticalX;
    return std::log(exact_sum) * (1.0 - r) / r;
}

// Least-squares line through (2n, log10(a_{2n}/(2n)!)).
struct AsymptoticFit {
    std::size_t n_min = 0, n_max = 0;
    std::size_t points = 0;
    double slope_log10 = 0.0;
    double intercept_log10 = 0.0;
    double alpha_estimate = 0.0;
    double C_estimate = 0.0;
    // Plot data: (2n, log10(a_{2n}/(2n)!)) for every point used.
    std::vector<std::pair<std::size_t, double>> samples;
};

// log10 of a positive rational without overflowing double.
inline double log10_rational(const Rational &q)
{
    if (q.sign() <= 0) {
        throw std::domain_error("log10_rational: argument must be positive");
    }
    long exp_num = 0, exp_den = 0;
    const double mant_num = mpz_get_d_2exp(&exp_num, q.mpq().get_num_mpz_t());
    const double mant_den = mpz_get_d_2exp(&exp_den, q.mpq().get_den_mpz_t());
    return std::log10(mant_num / mant_den) + static_cast<double>(exp_num - exp_den) * std::log10(2.0);
}

inline AsymptoticFit fit_asymptotic_growth(std::size_t n_min, std::size_t n_max)
{
    if (n_min < 4 || n_min >= n_max || n_min % 2 != 0 || n_max % 2 != 0) {
        throw std::invalid_argument("fit_asymptotic_growth: need even 4 <= n_min < n_max");
    }
    shared_coeffs().ensure(n_max);
    AsymptoticFit fit;
    fit.n_min = n_min;
    fit.n_max = n_max;
    for (std::size_t n = n_min; n <= n_max; n += 2) {
        const Rational a = shared_coeffs().scaled(n);
        if (a.sign() > 0) {
            fit.samples.emplace_back(n, log10_rational(a));
        }
    }
    fit.points = fit.samples.size();
    if (fit.points < 3) {
        throw std::invalid_argument("fit_asymptotic_growth: fewer than 3 usable points");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto &[n, y] : fit.samples) {
        const double xv = static_cast<double>(n);
        sx += xv;
        sy += y;
        sxx += xv * xv;
        sxy += xv * y;
    }
    const double m = static_cast<double>(fit.points);
    fit.slope_log10 = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    fit.intercept_log10 = (sy - fit.slope_log10 * sx) / m;
    fit.alpha_estimate = std::pow(10.0, fit.slope_log10);
    fit.C_estimate = std::pow(10.0, fit.intercept_log10);
    return fit;
}

} // namespace lowtemp

#endif
