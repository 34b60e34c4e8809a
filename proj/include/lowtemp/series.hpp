#ifndef LOWTEMP_SERIES_HPP
#define LOWTEMP_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <lowtemp/rational.hpp>

namespace lowtemp
{

// Truncated formal power series in x with exact coefficients.
//
// The truncation order is part of the value: coefficients are known for
// powers 0..order and nothing is known beyond. Binary operations truncate to
// the smaller operand order. Negative powers are not representable; callers
// carry prefactors such as 2/x separately (see Prefactor in partition.hpp).
class Series
{
public:
    explicit Series(std::size_t order = 0) : coeffs_(order + 1) {}

    Series(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order + 1);
    }

    // Coefficients listed from power 0; order defaults to the last listed power.
    Series(std::initializer_list<Rational> coeffs) : coeffs_(coeffs)
    {
        if (coeffs_.empty()) {
            coeffs_.emplace_back(0);
        }
    }

    static Series monomial(const Rational &c, std::size_t power, std::size_t order)
    {
        Series s(order);
        if (power <= order) {
            s.coeffs_[power] = c;
        }
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const Rational &operator[](std::size_t power) const { return coeffs_.at(power); }
    Rational &operator[](std::size_t power) { return coeffs_.at(power); }

    const std::vector<Rational> &coeffs() const { return coeffs_; }

    Series truncated(std::size_t order) const
    {
        if (order > this->order()) {
            throw std::invalid_argument("Series::truncated: cannot extend past the known order");
        }
        return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1),
                      order);
    }

    friend Series operator+(const Series &a, const Series &b)
    {
        const std::size_t order = std::min(a.order(), b.order());
        Series r(order);
        for (std::size_t i = 0; i <= order; ++i) {
            r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        }
        return r;
    }

    friend Series operator-(const Series &a, const Series &b)
    {
        const std::size_t order = std::min(a.order(), b.order());
        Series r(order);
        for (std::size_t i = 0; i <= order; ++i) {
            r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        }
        return r;
    }

    // Cauchy product.
    friend Series operator*(const Series &a, const Series &b)
    {
        const std::size_t order = std::min(a.order(), b.order());
        Series r(order);
        for (std::size_t i = 0; i <= order; ++i) {
            if (a.coeffs_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j <= order; ++j) {
                if (!b.coeffs_[j].is_zero()) {
                    r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return r;
    }

    friend Series operator*(const Rational &c, Series s)
    {
        for (auto &v : s.coeffs_) {
            v *= c;
        }
        return s;
    }

    friend bool operator==(const Series &a, const Series &b) { return a.coeffs_ == b.coeffs_; }

    friend std::ostream &operator<<(std::ostream &os, const Series &s)
    {
        bool first = true;
        for (std::size_t i = 0; i <= s.order(); ++i) {
            if (s.coeffs_[i].is_zero()) {
                continue;
            }
            os << (first ? "" : " + ") << s.coeffs_[i];
            if (i > 0) {
                os << "*x^" << i;
            }
            first = false;
        }
        if (first) {
            os << "0";
        }
        return os << " + O(x^" << s.order() + 1 << ")";
    }

private:
    std::vector<Rational> coeffs_;
};

// exp of a series with zero constant term, via b_N = (1/N) sum_{n=1..N} n a_n b_{N-n}.
inline Series exp(const Series &a)
{
    if (!a[0].is_zero()) {
        throw std::domain_error("exp(Series): constant term must be zero");
    }
    const std::size_t order = a.order();
    Series b(order);
    b[0] = 1;
    std::vector<Rational> weighted(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        weighted[n] = Rational(static_cast<long>(n)) * a[n];
    }
    for (std::size_t N = 1; N <= order; ++N) {
        Rational acc;
        for (std::size_t n = 1; n <= N; ++n) {
            if (!weighted[n].is_zero() && !b[N - n].is_zero()) {
                acc += weighted[n] * b[N - n];
            }
        }
        b[N] = acc / Rational(static_cast<long>(N));
    }
    return b;
}

// log of a series with constant term 1, via N b_N = N a_N - sum_{n=1..N-1} n b_n a_{N-n}.
inline Series log(const Series &a)
{
    if (a[0] != Rational(1)) {
        throw std::domain_error("log(Series): constant term must be 1");
    }
    const std::size_t order = a.order();
    Series b(order);
    for (std::size_t N = 1; N <= order; ++N) {
        Rational acc = Rational(static_cast<long>(N)) * a[N];
        for (std::size_t n = 1; n < N; ++n) {
            if (!b[n].is_zero() && !a[N - n].is_zero()) {
                acc -= Rational(static_cast<long>(n)) * b[n] * a[N - n];
            }
        }
        b[N] = acc / Rational(static_cast<long>(N));
    }
    return b;
}

} // namespace lowtemp

#endif
