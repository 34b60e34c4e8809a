#ifndef LOWTEMP_SELFTEST_HPP
#define LOWTEMP_SELFTEST_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <lowtemp/bell.hpp>
#include <lowtemp/free_energy.hpp>
#include <lowtemp/partition.hpp>
#include <lowtemp/rational.hpp>
#include <lowtemp/series.hpp>

namespace lowtemp
{

struct SelftestOptions {
    std::set<std::string> skip;
    // Replaces a_8/8! in the coefficients used by the series path only.
    std::optional<Rational> inject_a8;
    std::uint64_t seed = 20140611;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;
};

inline const std::vector<std::string> &selftest_suite_names()
{
    static const std::vector<std::string> names{"golden", "dual-path", "exp-log", "bell", "brute-force"};
    return names;
}

namespace detail
{

inline Rational random_rational(std::mt19937_64 &rng, long span = 9)
{
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    return Rational(num(rng), den(rng));
}

inline std::string suite_golden()
{
    static const char *scaled[] = {"0", "0", "0",   "1", "0",      "2", "0",      "9/2", "0",      "12",
                                   "0", "112/3", "0", "130", "0", "1961/4", "0", "5876/3", "0", "40871/5"};
    static const long g[] = {0, 0, 0, 1, 0, 2, 0, 5, 0, 14, 0, 44, 0, 152, 0, 566, 0, 2234, 0, 9228};
    FreeEnergyCoeffs &coeffs = shared_coeffs();
    coeffs.ensure(20);
    const DensityOfStates dos = dos_fast(20, coeffs);
    for (std::size_t n = 1; n <= 20; ++n) {
        if (coeffs.scaled(n) != Rational::parse(scaled[n - 1])) {
            return "a_" + std::to_string(n) + "/n! = " + coeffs.scaled(n).to_string() + ", expected " + scaled[n - 1];
        }
        if (dos[n] != Rational(g[n - 1])) {
            return "g(" + std::to_string(n) + ") = " + dos[n].to_string() + ", expected " + std::to_string(g[n - 1]);
        }
    }
    return {};
}

inline std::string suite_dual_path(const SelftestOptions &opt)
{
    constexpr std::size_t n_max = kBellCrossCheckLimit;
    shared_coeffs().ensure(n_max);
    FreeEnergyCoeffs series_side(shared_coeffs());
    if (opt.inject_a8) {
        series_side.override_entry(8, *opt.inject_a8);
    }
    const DensityOfStates fast = dos_fast(n_max, series_side);
    // The Bell side recomputes every a_n from the quadruple sum.
    CoeffSequence<Rational> a;
    for (std::size_t n = 1; n <= n_max; ++n) {
        a.push_back(coeff_a(n) * Rational(factorial(n)));
    }
    for (std::size_t N = 1; N <= n_max; ++N) {
        const Rational bell = complete_bell(N, a) / Rational(factorial(N));
        if (bell != fast[N]) {
            return "g(" + std::to_string(N) + "): series " + fast[N].to_string() + " vs Bell " + bell.to_string();
        }
    }
    return {};
}

inline std::string suite_exp_log(const SelftestOptions &opt)
{
    std::mt19937_64 rng(opt.seed);
    for (int trial = 0; trial < 10; ++trial) {
        Series s(24);
        for (std::size_t i = 1; i <= 24; ++i) {
            s[i] = random_rational(rng);
        }
        if (log(exp(s)) != s) {
            return "log(exp(s)) != s on random trial " + std::to_string(trial);
        }
    }
    const PartitionSeries z = partition_series(40);
    if (log(z.series) != free_energy_series(40)) {
        return "log of the partition series differs from the free-energy series";
    }
    return {};
}

inline std::string suite_bell(const SelftestOptions &opt)
{
    std::mt19937_64 rng(opt.seed + 1);
    CoeffSequence<Rational> a;
    for (std::size_t n = 1; n <= 14; ++n) {
        a.push_back(random_rational(rng));
    }
    const BellTable<Rational> table = bell_table_recurrence(14, a);
    for (std::size_t N = 1; N <= 14; ++N) {
        for (std::size_t k = 1; k <= N; ++k) {
            if (table(N, k) != partial_bell_explicit(N, k, a)) {
                return "B_{" + std::to_string(N) + "," + std::to_string(k) + "} recurrence != explicit sum";
            }
        }
    }
    return {};
}

inline std::string suite_brute_force()
{
    const TorusDOS torus = brute_force_dos(5);
    if (torus.counts[0] != 2) {
        return "counts[0] = " + std::to_string(torus.counts[0]);
    }
    for (std::size_t N = 1; N < torus.counts.size(); N += 2) {
        if (torus.counts[N] != 0) {
            return "odd count at N=" + std::to_string(N);
        }
    }
    const Rational expected = dos_finite_poly(4)(Rational(25));
    if (Rational(static_cast<long>(torus.per_orientation(4))) != expected) {
        return "per-orientation count at N=4 is " + std::to_string(torus.per_orientation(4)) + ", polynomial gives " +
               expected.to_string();
    }
    return {};
}

} // namespace detail

// Runs every suite not listed in opt.skip. A suite passes when it returns an
// empty diagnostic and throws nothing.
inline std::vector<SuiteResult> run_selftest(const SelftestOptions &opt)
{
    const std::vector<std::pair<std::string, std::function<std::string()>>> suites{
        {"golden", [] { return detail::suite_golden(); }},
        {"dual-path", [&] { return detail::suite_dual_path(opt); }},
        {"exp-log", [&] { return detail::suite_exp_log(opt); }},
        {"bell", [&] { return detail::suite_bell(opt); }},
        {"brute-force", [] { return detail::suite_brute_force(); }},
    };
    std::vector<SuiteResult> results;
    for (const auto &[name, run] : suites) {
        if (opt.skip.count(name)) {
            continue;
        }
        SuiteResult r;
        r.name = name;
        const auto start = std::chrono::steady_clock::now();
        try {
            r.detail = run();
            r.passed = r.detail.empty();
        } catch (const std::exception &e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace lowtemp

#endif
