#ifndef LOWTEMP_PARTITION_HPP
#define LOWTEMP_PARTITION_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <lowtemp/bell.hpp>
#include <lowtemp/free_energy.hpp>
#include <lowtemp/rational.hpp>
#include <lowtemp/series.hpp>
#include <lowtemp/vpolynomial.hpp>

namespace lowtemp
{

// Number of configurations g(N) with energy 2JN above the ground state on the
// infinite lattice, per ground-state orientation. Entry N for 0 <= N <= n_max.
struct DensityOfStates {
    std::vector<Rational> g;

    std::size_t n_max() const { return g.empty() ? 0 : g.size() - 1; }
    const Rational &operator[](std::size_t N) const { return g.at(N); }
};

// Prefactor c * x^e multiplying a series whose negative powers are not
// representable. For finite lattices the exponent is per site and multiplies V.
struct Prefactor {
    Rational constant;
    long x_exponent = 0;
    bool exponent_per_site = false;

    long exponent_for_volume(long V) const { return exponent_per_site ? x_exponent * V : x_exponent; }
};

// Bell arguments a_n (not scaled) for 1 <= n <= n_max.
inline CoeffSequence<Rational> bell_arguments(std::size_t n_max, const FreeEnergyCoeffs &coeffs)
{
    CoeffSequence<Rational> a;
    for (std::size_t n = 1; n <= n_max; ++n) {
        a.push_back(coeffs.unscaled(n));
    }
    return a;
}

// g(N) = Y_N({a_n}) / N!, by the explicit Bell sum.
inline Rational dos_via_bell(std::size_t N, const FreeEnergyCoeffs &coeffs)
{
    if (N == 0) {
        return Rational(1);
    }
    return complete_bell(N, bell_arguments(N, coeffs)) / Rational(factorial(N));
}

// Fast path only: coefficients of exp(sum a_n x^n / n!).
inline DensityOfStates dos_fast(std::size_t n_max, const FreeEnergyCoeffs &coeffs)
{
    if (n_max == 0) {
        return DensityOfStates{{Rational(1)}};
    }
    const Series z = exp(free_energy_series(n_max, coeffs));
    return DensityOfStates{z.coeffs()};
}

inline constexpr std::size_t kBellCrossCheckLimit = 30;

// g(N) for N <= n_max via series exponentiation, cross-checked against the
// explicit complete-Bell sum for N <= min(n_max, 30). Throws std::logic_error
// if the two disagree.
inline DensityOfStates dos_infinite(std::size_t n_max, FreeEnergyCoeffs &coeffs, bool cross_check = true)
{
    coeffs.ensure(std::max<std::size_t>(n_max, 1));
    DensityOfStates dos = dos_fast(n_max, coeffs);
    if (cross_check) {
        for (std::size_t N = 1; N <= std::min(n_max, kBellCrossCheckLimit); ++N) {
            if (dos_via_bell(N, coeffs) != dos[N]) {
                throw std::logic_error("dos_infinite: series and Bell paths disagree at N=" + std::to_string(N));
            }
        }
    }
    return dos;
}

inline DensityOfStates dos_infinite(std::size_t n_max, bool cross_check = true)
{
    return dos_infinite(n_max, shared_coeffs(), cross_check);
}

// g(N, V) = Y_N({V a_n}) / N! as a polynomial in V. This equals the torus
// count only while N < M = sqrt(V); beyond that winding contours are missing.
inline VPolynomial dos_finite_poly(std::size_t N, FreeEnergyCoeffs &coeffs)
{
    if (N == 0) {
        return VPolynomial(Rational(1));
    }
    if (N % 2 != 0) {
        return VPolynomial();
    }
    coeffs.ensure(N);
    CoeffSequence<VPolynomial> a;
    for (std::size_t n = 1; n <= N; ++n) {
        a.push_back(VPolynomial::monomial(coeffs.unscaled(n), 1));
    }
    const BellTable<VPolynomial> table = bell_table_recurrence(N, a);
    return table.complete(N) * VPolynomial(Rational(BigInt(1), factorial(N)));
}

inline VPolynomial dos_finite_poly(std::size_t N) { return dos_finite_poly(N, shared_coeffs()); }

// g(N, V) together with whether it is exact on an M x M torus (N < M).
struct FiniteLatticeDos {
    VPolynomial poly;
    bool exact_on_torus = false;
};

inline FiniteLatticeDos dos_finite(std::size_t N, std::size_t M)
{
    return FiniteLatticeDos{dos_finite_poly(N), N < M};
}

// Exhaustive energy histogram of an M x M periodic lattice.
//
// counts[N] is the number of configurations (both ground-state orientations)
// with energy E = -2JV + 2JN, i.e. with N unsatisfied bonds. sum counts = 2^V
// and counts[0] = 2. The per-orientation count g(N, V) is counts[N] / 2.
struct TorusDOS {
    std::size_t M = 0;
    std::vector<std::uint64_t> counts;

    std::size_t volume() const { return M * M; }
    std::uint64_t per_orientation(std::size_t N) const { return N < counts.size() ? counts[N] / 2 : 0; }
};

inline constexpr std::size_t kMaxTorusSize = 5;

inline TorusDOS brute_force_dos(std::size_t M, unsigned threads = 0)
{
    if (M < 2 || M > kMaxTorusSize) {
        throw std::invalid_argument("brute_force_dos: M must be in [2, 5], got " + std::to_string(M));
    }
    const std::size_t V = M * M;
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << V) - 1);
    std::uint32_t first_col = 0;
    for (std::size_t r = 0; r < M; ++r) {
        first_col |= std::uint32_t{1} << (r * M);
    }
    const std::uint32_t last_col = first_col << (M - 1);

    // Site (r, c) is bit r*M + c. The right neighbour of (r, c) is (r, c+1 mod M),
    // the lower neighbour is (r+1 mod M, c).
    auto right = [=](std::uint32_t s) { return ((s >> 1) & ~last_col) | ((s << (M - 1)) & last_col); };
    auto down = [=](std::uint32_t s) { return ((s >> M) | (s << (V - M))) & full; };
    auto unsatisfied = [=](std::uint32_t s) {
        return static_cast<std::size_t>(std::popcount(s ^ right(s)) + std::popcount(s ^ down(s)));
    };

    const std::uint64_t states = std::uint64_t{1} << V;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, states / 64 + 1));
    const std::size_t bonds = 2 * V;
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(bonds + 1, 0));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                const std::uint64_t begin = states * t / threads;
                const std::uint64_t end = states * (t + 1) / threads;
                auto &hist = partial[t];
                for (std::uint64_t s = begin; s < end; ++s) {
                    ++hist[unsatisfied(static_cast<std::uint32_t>(s))];
                }
            });
        }
    }
    TorusDOS dos{M, std::vector<std::uint64_t>(bonds + 1, 0)};
    for (const auto &hist : partial) {
        for (std::size_t N = 0; N <= bonds; ++N) {
            dos.counts[N] += hist[N];
        }
    }
    return dos;
}

// Per-site partition function Z(x) = (2/x) (1 + sum g(N) x^N).
struct PartitionSeries {
    Prefactor prefactor;
    Series series;
};

inline PartitionSeries partition_series(std::size_t n_max)
{
    const DensityOfStates dos = dos_infinite(n_max, false);
    return PartitionSeries{Prefactor{Rational(2), -1, false}, Series(dos.g, n_max)};
}

// Prefactor of the finite-lattice Z(x, V) = (2/x^V) sum g(N, V) x^N.
inline Prefactor finite_partition_prefactor() { return Prefactor{Rational(2), -1, true}; }

} // namespace lowtemp

#endif
