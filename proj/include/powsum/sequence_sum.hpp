#pragma once

/**
 * @file sequence_sum.hpp
 * @brief Sums of sequences whose consecutive differences are a polynomial
 *        in the index: x(1) = a0, x(k+1) - x(k) = D(k).
 *
 * The general term is x(n) = a0 + sum_{j=1..n-1} D(j), a polynomial in n.
 * Raising it to the power m and applying the summation operator gives the
 * closed form of sum_{k=1..n} x(k)^m.
 */

#include "powsum/polynomial.hpp"
#include "powsum/rational.hpp"

namespace powsum {

struct DifferenceSpec {
    Rational a0;
    /// D(n), coefficients ascending. May be zero (constant sequence).
    Polynomial diff;

    friend bool operator==(const DifferenceSpec&, const DifferenceSpec&) = default;
};

struct GeneralTerm {
    DifferenceSpec spec;
    Polynomial term;
};

struct SequenceSum {
    DifferenceSpec spec;
    unsigned power = 1;
    Polynomial formula;
};

/// Q with Q(0) = 0 and Q(n) = sum_{k=1..n} p(k) for every integer n >= 1.
/// Built by linearity from the unit power sums.
Polynomial summation_operator(const Polynomial& p);

GeneralTerm general_term(const DifferenceSpec& spec);

/// Throws std::invalid_argument when m == 0.
SequenceSum derive_sum(const DifferenceSpec& spec, unsigned m);

}  // namespace powsum
