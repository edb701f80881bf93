#include "powsum/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace powsum {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(den_) == 0)
        throw DivisionByZero("rational with zero denominator");
    canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

void Rational::canonicalize() {
    if (sgn(num_) == 0) {
        den_ = 1;
        return;
    }
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    canonicalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    canonicalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero())
        throw DivisionByZero("division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    canonicalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(BigInt(a.num_ * b.den_), BigInt(b.num_ * a.den_));
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (is_integer())
        return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&](const char* why) {
        return ParseError("invalid rational \"" + std::string(text) + "\": " + why);
    };

    std::string_view body = text;
    const bool negative = !body.empty() && body.front() == '-';
    if (negative)
        body.remove_prefix(1);

    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);

    if (!all_digits(num_text))
        throw bad("expected digits before '/'");
    if (!all_digits(den_text))
        throw bad(slash == std::string_view::npos ? "expected digits" : "expected digits after '/'");

    BigInt num(std::string(num_text), 10);
    BigInt den(std::string(den_text), 10);
    if (sgn(den) == 0)
        throw bad("zero denominator");
    if (negative)
        num = -num;
    return Rational(std::move(num), std::move(den));
}

Rational pow(const Rational& x, unsigned e) {
    Rational result(1);
    Rational base = x;
    while (e != 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e != 0)
            base *= base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace powsum
