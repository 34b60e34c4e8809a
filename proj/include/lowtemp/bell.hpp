#ifndef LOWTEMP_BELL_HPP
#define LOWTEMP_BELL_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <lowtemp/rational.hpp>

namespace lowtemp
{

// Value types the Bell machinery can run over: a commutative ring that can be
// built from an exact rational scalar. Rational and VPolynomial qualify.
template <typename T>
concept BellRing = requires(T a, T b, Rational q) {
    T{};
    T(q);
    { a + b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
};

// Bell arguments a_1, a_2, ..., stored 1-indexed.
template <BellRing T = Rational>
class CoeffSequence
{
public:
    CoeffSequence() = default;
    explicit CoeffSequence(std::vector<T> one_based) : values_(std::move(one_based)) {}

    std::size_t size() const { return values_.size(); }
    const T &operator[](std::size_t n) const { return values_.at(n - 1); }
    T &operator[](std::size_t n) { return values_.at(n - 1); }

    void push_back(T v) { values_.push_back(std::move(v)); }
    const std::vector<T> &values() const { return values_; }

    void require(std::size_t N, const char *who) const
    {
        if (values_.size() < N) {
            throw std::invalid_argument(std::string(who) + ": coefficient sequence has " +
                                        std::to_string(values_.size()) + " entries, need " +
                                        std::to_string(N));
        }
    }

private:
    std::vector<T> values_;
};

namespace detail
{

inline void check_block_count(std::size_t N, std::size_t k, const char *who)
{
    if (k < 1 || k > N) {
        throw std::invalid_argument(std::string(who) + ": need 1 <= k <= N, got N=" + std::to_string(N) +
                                    ", k=" + std::to_string(k));
    }
}

// Visits every multiplicity vector c (c[n] = number of blocks of size n) with
// sum c = k and sum n c_n = N. Part sizes are chosen largest first, and a
// branch is abandoned once the remaining weight cannot be filled.
inline void for_each_block_pattern(std::size_t N, std::size_t k,
                                   const std::function<void(const std::vector<std::size_t> &)> &visit)
{
    std::vector<std::size_t> c(N + 1, 0);
    std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t max_part, std::size_t weight,
                                                                        std::size_t blocks) {
        if (blocks == 0) {
            if (weight == 0) {
                visit(c);
            }
            return;
        }
        // Each remaining block has size >= 1 and <= max_part.
        if (weight < blocks || weight > blocks * max_part) {
            return;
        }
        for (std::size_t part = std::min(max_part, weight - (blocks - 1)); part >= 1; --part) {
            for (std::size_t m = 1; m <= blocks && m * part <= weight; ++m) {
                c[part] = m;
                rec(part - 1, weight - m * part, blocks - m);
            }
            c[part] = 0;
            if (part == 1) {
                break;
            }
        }
    };
    rec(N - k + 1, N, k);
}

} // namespace detail

// B_{N,k}(a) = N! sum_c prod_n (1/c_n!) (a_n/n!)^{c_n}, summed over integer
// partitions of N into exactly k parts. Exponential in N; this is the
// reference path, not the production one.
template <BellRing T>
T partial_bell_explicit(std::size_t N, std::size_t k, const CoeffSequence<T> &a)
{
    detail::check_block_count(N, k, "partial_bell_explicit");
    a.require(N - k + 1, "partial_bell_explicit");
    // scaled[n] = a_n / n!
    std::vector<T> scaled(N + 1);
    for (std::size_t n = 1; n <= N - k + 1; ++n) {
        scaled[n] = a[n] * T(Rational(BigInt(1), factorial(n)));
    }
    T total{};
    detail::for_each_block_pattern(N, k, [&](const std::vector<std::size_t> &c) {
        T term(Rational(factorial(N)));
        for (std::size_t n = 1; n < c.size(); ++n) {
            if (c[n] == 0) {
                continue;
            }
            for (std::size_t i = 0; i < c[n]; ++i) {
                term = term * scaled[n];
            }
            term = term * T(Rational(BigInt(1), factorial(c[n])));
        }
        total = total + term;
    });
    return total;
}

// Triangular table B[N][k], 0 <= k <= N <= n_max, with B[0][0] = 1.
template <BellRing T = Rational>
class BellTable
{
public:
    BellTable() = default;
    explicit BellTable(std::size_t n_max) : n_max_(n_max), rows_(n_max + 1)
    {
        for (std::size_t n = 0; n <= n_max; ++n) {
            rows_[n].resize(n + 1);
        }
    }

    std::size_t n_max() const { return n_max_; }

    const T &operator()(std::size_t N, std::size_t k) const { return rows_.at(N).at(k); }
    T &operator()(std::size_t N, std::size_t k) { return rows_.at(N).at(k); }

    // Y_N = sum_k B[N][k]; Y_0 = 1.
    T complete(std::size_t N) const
    {
        if (N == 0) {
            return T(Rational(1));
        }
        T sum{};
        for (std::size_t k = 1; k <= N; ++k) {
            sum = sum + rows_.at(N)[k];
        }
        return sum;
    }

private:
    std::size_t n_max_ = 0;
    std::vector<std::vector<T>> rows_;
};

// B_{n,k} = sum_{l=k-1}^{n-1} C(n-1, l) a_{n-l} B_{l,k-1}.
//
// A variant with C(n, l) and B_{l,k-l} circulates; it does not reproduce the
// partition sum and is not used.
template <BellRing T>
BellTable<T> bell_table_recurrence(std::size_t n_max, const CoeffSequence<T> &a)
{
    if (n_max < 1) {
        throw std::invalid_argument("bell_table_recurrence: n_max must be >= 1");
    }
    a.require(n_max, "bell_table_recurrence");
    BellTable<T> table(n_max);
    table(0, 0) = T(Rational(1));
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            T acc{};
            for (std::size_t l = k - 1; l <= n - 1; ++l) {
                acc = acc + T(Rational(binomial(n - 1, l))) * a[n - l] * table(l, k - 1);
            }
            table(n, k) = std::move(acc);
        }
    }
    return table;
}

// Y_N(a) by the explicit partition sum; Y_0 = 1.
template <BellRing T>
T complete_bell(std::size_t N, const CoeffSequence<T> &a)
{
    if (N == 0) {
        return T(Rational(1));
    }
    a.require(N, "complete_bell");
    T sum{};
    for (std::size_t k = 1; k <= N; ++k) {
        sum = sum + partial_bell_explicit(N, k, a);
    }
    return sum;
}

// Checks Y_N({c b^n a_n}) == sum_k c^k b^N B_{N,k}({a_n}), both sides evaluated
// by the explicit sum.
inline bool bell_scaling_check(std::size_t N, const CoeffSequence<Rational> &a, const Rational &b, const Rational &c)
{
    if (N < 1) {
        throw std::invalid_argument("bell_scaling_check: N must be >= 1");
    }
    a.require(N, "bell_scaling_check");
    CoeffSequence<Rational> scaled;
    for (std::size_t n = 1; n <= N; ++n) {
        scaled.push_back(c * pow(b, n) * a[n]);
    }
    const Rational lhs = complete_bell(N, scaled);
    Rational rhs;
    const Rational bN = pow(b, N);
    for (std::size_t k = 1; k <= N; ++k) {
        rhs += pow(c, k) * bN * partial_bell_explicit(N, k, a);
    }
    return lhs == rhs;
}

// Unsigned Lah number: B_{N,k}(1!, 2!, 3!, ...) = (N!/k!) C(N-1, k-1).
inline Rational lah_number(std::size_t N, std::size_t k)
{
    detail::check_block_count(N, k, "lah_number");
    return Rational(factorial(N) * binomial(N - 1, k - 1), factorial(k));
}

} // namespace lowtemp

#endif
