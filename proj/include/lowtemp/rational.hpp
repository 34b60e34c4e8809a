#ifndef LOWTEMP_RATIONAL_HPP
#define LOWTEMP_RATIONAL_HPP

#include <cctype>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace lowtemp
{

// Arbitrary-precision integer, used for counts and factorials.
using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational
{
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(int v) : value_(static_cast<long>(v)) {}
    Rational(const BigInt &v) : value_(v) {}
    Rational(const BigInt &num, const BigInt &den)
    {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational from_mpq(mpq_class q)
    {
        Rational r;
        r.value_ = std::move(q);
        r.value_.canonicalize();
        return r;
    }

    // Accepts "p", "p/q" and decimal literals such as "0.36", "-1.25e-3".
    // Decimals are converted from their literal digits, so "0.36" is 9/25.
    static Rational parse(std::string_view text)
    {
        auto trim = [](std::string_view s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
                s.remove_prefix(1);
            }
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
                s.remove_suffix(1);
            }
            return s;
        };
        text = trim(text);
        if (text.empty()) {
            throw std::invalid_argument("Rational::parse: empty string");
        }
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            BigInt num = parse_integer(trim(text.substr(0, slash)));
            BigInt den = parse_integer(trim(text.substr(slash + 1)));
            return Rational(num, den);
        }
        return parse_decimal(text);
    }

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class &mpq() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }

    // Canonical text: "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const
    {
        if (is_integer()) {
            return value_.get_num().get_str();
        }
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return from_mpq(-a.value_); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

private:
    static BigInt parse_integer(std::string_view s)
    {
        std::string digits(s);
        if (!digits.empty() && digits.front() == '+') {
            digits.erase(0, 1);
        }
        bool ok = !digits.empty();
        for (std::size_t i = 0; i < digits.size() && ok; ++i) {
            char c = digits[i];
            ok = std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && digits.size() > 1);
        }
        if (!ok) {
            throw std::invalid_argument("Rational::parse: malformed integer '" + std::string(s) + "'");
        }
        return BigInt(digits, 10);
    }

    static Rational parse_decimal(std::string_view s)
    {
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            std::string exp_text(s.substr(e + 1));
            try {
                std::size_t used = 0;
                exponent = std::stol(exp_text, &used);
                if (used != exp_text.size()) {
                    throw std::invalid_argument("trailing");
                }
            } catch (const std::exception &) {
                throw std::invalid_argument("Rational::parse: malformed exponent in '" + std::string(s) + "'");
            }
            s = s.substr(0, e);
        }
        std::string mantissa(s);
        long frac_digits = 0;
        if (auto dot = mantissa.find('.'); dot != std::string::npos) {
            frac_digits = static_cast<long>(mantissa.size() - dot - 1);
            mantissa.erase(dot, 1);
            if (mantissa.empty() || mantissa == "-" || mantissa == "+") {
                throw std::invalid_argument("Rational::parse: malformed decimal '" + std::string(s) + "'");
            }
        }
        BigInt num = parse_integer(mantissa);
        long shift = exponent - frac_digits;
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
        return shift < 0 ? Rational(num, scale) : Rational(num * scale);
    }

    mpq_class value_{0};
};

inline Rational pow(const Rational &base, unsigned long exponent)
{
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

inline BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k)
{
    if (k > n) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace lowtemp

#endif
