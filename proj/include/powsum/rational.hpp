#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars over arbitrary-precision integers.
 *
 * Every value is kept in lowest terms with a positive denominator, and zero
 * is always 0/1. Equality is therefore structural.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace powsum {

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using BigInt = mpz_class;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(static_cast<long>(n)), den_(1) {}  // NOLINT: implicit by design of a scalar
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    /// Throws DivisionByZero when den == 0.
    Rational(BigInt num, BigInt den);
    Rational(std::int64_t num, std::int64_t den);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return sgn(num_) == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q", or "p" when the value is an integer.
    std::string to_string() const;

    /// Accepts `[-]digits` or `[-]digits/digits`; the result is canonical.
    static Rational parse(std::string_view text);

private:
    void canonicalize();

    BigInt num_;
    BigInt den_;
};

/// x^e, with pow(x, 0) == 1 for every x including zero.
Rational pow(const Rational& x, unsigned e);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace powsum
