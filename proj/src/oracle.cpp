#include "powsum/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace powsum::oracle {

namespace {

Rational power_by_loop(const Rational& x, unsigned m) {
    Rational r(1);
    for (unsigned i = 0; i < m; ++i)
        r *= x;
    return r;
}

// D(k) straight from the coefficient list.
Rational difference_at(const DifferenceSpec& spec, const Rational& k) {
    Rational value;
    Rational k_power(1);
    for (const Rational& c : spec.diff.coefficients()) {
        value += c * k_power;
        k_power *= k;
    }
    return value;
}

}  // namespace

Rational brute_sum(const ArithmeticSpec& spec, unsigned m, std::uint64_t n) {
    Rational total;
    Rational x = spec.a0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        total += power_by_loop(x, m);
        x += spec.d;
    }
    return total;
}

Rational brute_seq_sum(const DifferenceSpec& spec, unsigned m, std::uint64_t n) {
    if (m == 0)
        throw std::invalid_argument("brute_seq_sum needs power m >= 1");
    Rational total;
    Rational x = spec.a0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        total += power_by_loop(x, m);
        x += difference_at(spec, Rational(static_cast<std::int64_t>(k)));
    }
    return total;
}

Rational classical_bernoulli(unsigned k) {
    std::vector<Rational> b{Rational(1)};
    for (unsigned j = 1; j <= k; ++j) {
        // binom(j+1, i) for i = 0..j-1, built row by row
        Rational acc;
        BigInt binom = 1;
        for (unsigned i = 0; i < j; ++i) {
            acc += Rational(binom) * b[i];
            binom = binom * (j + 1 - i) / (i + 1);
        }
        b.push_back(-acc / Rational(static_cast<std::int64_t>(j + 1)));
    }
    return b[k];
}

}  // namespace powsum::oracle
