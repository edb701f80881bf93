#pragma once

// Seeded random inputs for property-style tests.

#include <cstdint>
#include <random>
#include <vector>

#include "powsum/polynomial.hpp"
#include "powsum/rational.hpp"

namespace powsum::testing {

class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Rational rational(std::int64_t bound = 20, std::int64_t max_den = 12) {
        return Rational(integer(-bound, bound), integer(1, max_den));
    }

    Rational nonzero_rational(std::int64_t bound = 20, std::int64_t max_den = 12) {
        Rational r;
        while (r.is_zero())
            r = rational(bound, max_den);
        return r;
    }

    Polynomial polynomial(std::size_t max_degree, std::int64_t bound = 9, std::int64_t max_den = 6) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(max_degree) + 1)));
        for (auto& c : coeffs)
            c = rational(bound, max_den);
        return Polynomial(std::move(coeffs));
    }

private:
    std::mt19937 rng_;
};

}  // namespace powsum::testing
