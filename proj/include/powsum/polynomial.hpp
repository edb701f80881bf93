#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "powsum/rational.hpp"

namespace powsum {

/**
 * Dense univariate polynomial in the index variable n over Rational.
 *
 * coefficient(i) is the coefficient of n^i. Trailing zero coefficients are
 * never stored, so the zero polynomial has no coefficients and no degree.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    /// c * n^power
    static Polynomial monomial(const Rational& c, std::size_t power);
    /// The polynomial n.
    static Polynomial identity();

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    /// Zero for indices beyond the degree.
    Rational coefficient(std::size_t power) const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(Polynomial p, const Polynomial& q) { return p *= q; }
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Polynomial scale(const Polynomial& p, const Rational& c);
Polynomial pow(const Polynomial& p, unsigned e);
Polynomial differentiate(const Polynomial& p);
/// Antiderivative with zero constant term.
Polynomial antidifferentiate(const Polynomial& p);
Rational evaluate(const Polynomial& p, const Rational& x);
/// p(q(n))
Polynomial compose(const Polynomial& p, const Polynomial& q);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace powsum
