#include "powsum/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "powsum/render.hpp"

namespace powsum {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
    trim();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial({c});
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::identity() {
    return monomial(Rational(1), 1);
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

Rational Polynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    return *this += -rhs;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

Polynomial scale(const Polynomial& p, const Rational& c) {
    return p * c;
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial result = Polynomial::constant(Rational(1));
    Polynomial base = p;
    while (e != 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e != 0)
            base *= base;
    }
    return result;
}

Polynomial differentiate(const Polynomial& p) {
    const auto coeffs = p.coefficients();
    if (coeffs.size() <= 1)
        return {};
    std::vector<Rational> out;
    out.reserve(coeffs.size() - 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        out.push_back(coeffs[i] * Rational(static_cast<std::int64_t>(i)));
    return Polynomial(std::move(out));
}

Polynomial antidifferentiate(const Polynomial& p) {
    const auto coeffs = p.coefficients();
    if (coeffs.empty())
        return {};
    std::vector<Rational> out;
    out.reserve(coeffs.size() + 1);
    out.emplace_back();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out.push_back(coeffs[i] / Rational(static_cast<std::int64_t>(i + 1)));
    return Polynomial(std::move(out));
}

Rational evaluate(const Polynomial& p, const Rational& x) {
    const auto coeffs = p.coefficients();
    Rational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
    const auto coeffs = p.coefficients();
    Polynomial acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= q;
        acc += Polynomial::constant(*it);
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << render_polynomial(p, RenderStyle::plain);
}

}  // namespace powsum
