#pragma once

/**
 * @file power_sum.hpp
 * @brief Closed forms for S_m(n) = sum_{k=1..n} (a0 + D(k-1))^m.
 *
 * The closed form for power m is obtained from the one for power m-1:
 *
 *   S_m'(n) = m * D * S_{m-1}(n) + C
 *
 * Integrating with zero constant of integration (so S_m(0) = 0) and then
 * choosing C so that S_m(1) = a0^m gives S_m. C ends up as the extra
 * coefficient of n and is recorded alongside the formula. The base case is
 * S_0(n) = n.
 *
 * With a0 = 1, D = 1 the constant recorded for power m is the Bernoulli
 * number B_m (the B_1 = +1/2 convention), which is how bernoulli() works.
 */

#include <cstddef>
#include <vector>

#include "powsum/polynomial.hpp"
#include "powsum/rational.hpp"

namespace powsum {

/// The arithmetic sequence x_k = a0 + D(k-1), k >= 1.
struct ArithmeticSpec {
    Rational a0;
    Rational d;

    Rational term(const Rational& k) const { return a0 + d * (k - Rational(1)); }
    /// x_n as a polynomial in n.
    Polynomial term_polynomial() const;

    friend bool operator==(const ArithmeticSpec&, const ArithmeticSpec&) = default;
};

struct ClosedFormSum {
    ArithmeticSpec spec;
    unsigned power = 0;
    Polynomial formula;
    /// Constant fixed by S(1) = a0^m (C_{m-1} for m >= 1). For m = 0 this is
    /// the coefficient of n in S_0(n) = n, i.e. 1.
    Rational constant;
};

/// C_i for i = 1 .. values.size(), derived for one spec.
struct ConstantTable {
    ArithmeticSpec spec;
    std::vector<Rational> values;

    /// C_i; i is 1-based. Throws std::out_of_range outside 1..size().
    const Rational& at(std::size_t i) const;
    std::size_t size() const { return values.size(); }
};

/// m = 1 closed form: (D/2) n^2 + (a0 - D/2) n.
ClosedFormSum derive_linear(const ArithmeticSpec& spec);

/// Closed form for the m-th power sum. Lower powers are memoized per spec;
/// safe to call from several threads.
ClosedFormSum derive(const ArithmeticSpec& spec, unsigned m);

/// Throws std::invalid_argument when max_index == 0.
ConstantTable constant_table(const ArithmeticSpec& spec, std::size_t max_index);

/// B_k for k >= 2, read off the a0 = D = 1 constants. Throws
/// std::invalid_argument for k < 2; the recursion only yields C_i for i >= 1.
Rational bernoulli(unsigned k);

/// Drops every memoized derivation.
void clear_power_sum_cache();

}  // namespace powsum
