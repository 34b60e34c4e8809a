#ifndef LOWTEMP_VPOLYNOMIAL_HPP
#define LOWTEMP_VPOLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include <lowtemp/rational.hpp>

namespace lowtemp
{

// Polynomial in the lattice volume V with exact coefficients, stored sparsely
// as power -> coefficient. Zero coefficients are never stored.
class VPolynomial
{
public:
    VPolynomial() = default;
    VPolynomial(const Rational &constant)
    {
        if (!constant.is_zero()) {
            terms_.emplace(0, constant);
        }
    }

    static VPolynomial monomial(const Rational &c, std::size_t power)
    {
        VPolynomial p;
        if (!c.is_zero()) {
            p.terms_.emplace(power, c);
        }
        return p;
    }

    const std::map<std::size_t, Rational> &terms() const { return terms_; }

    Rational coeff(std::size_t power) const
    {
        auto it = terms_.find(power);
        return it == terms_.end() ? Rational() : it->second;
    }

    bool is_zero() const { return terms_.empty(); }

    // Highest power present; 0 for the zero polynomial.
    std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    Rational operator()(const Rational &V) const
    {
        Rational acc;
        for (const auto &[power, c] : terms_) {
            acc += c * pow(V, power);
        }
        return acc;
    }

    friend VPolynomial operator+(VPolynomial a, const VPolynomial &b)
    {
        for (const auto &[power, c] : b.terms_) {
            a.add_term(power, c);
        }
        return a;
    }

    friend VPolynomial operator*(const VPolynomial &a, const VPolynomial &b)
    {
        VPolynomial r;
        for (const auto &[pa, ca] : a.terms_) {
            for (const auto &[pb, cb] : b.terms_) {
                r.add_term(pa + pb, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const VPolynomial &a, const VPolynomial &b) { return a.terms_ == b.terms_; }

    // e.g. "9/2*V + 1/2*V^2"; "0" for the zero polynomial.
    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto &[power, c] : terms_) {
            if (!first) {
                os << (c.sign() < 0 ? " - " : " + ");
            } else if (c.sign() < 0) {
                os << "-";
            }
            const Rational mag = c.sign() < 0 ? -c : c;
            if (power == 0) {
                os << mag;
            } else {
                if (mag != Rational(1)) {
                    os << mag << "*";
                }
                os << "V";
                if (power > 1) {
                    os << "^" << power;
                }
            }
            first = false;
        }
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const VPolynomial &p) { return os << p.to_string(); }

private:
    void add_term(std::size_t power, const Rational &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.emplace(power, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    std::map<std::size_t, Rational> terms_;
};

} // namespace lowtemp

#endif
