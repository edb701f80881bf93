#pragma once

// Brute-force ground truth. Nothing here calls into the derivation code or
// polynomial algebra; only Rational arithmetic is shared.

#include <cstdint>

#include "powsum/power_sum.hpp"
#include "powsum/rational.hpp"
#include "powsum/sequence_sum.hpp"

namespace powsum::oracle {

/// sum_{k=1..n} (a0 + D(k-1))^m by direct accumulation.
Rational brute_sum(const ArithmeticSpec& spec, unsigned m, std::uint64_t n);

/// Builds x(1) = a0, x(k+1) = x(k) + D(k) step by step and returns
/// sum_{k=1..n} x(k)^m. Throws std::invalid_argument when m == 0.
Rational brute_seq_sum(const DifferenceSpec& spec, unsigned m, std::uint64_t n);

/// B_k from sum_{j=0..k} binom(k+1, j) B_j = 0 with B_0 = 1. This fixes
/// B_1 = -1/2; every B_k for k >= 2 is convention independent.
Rational classical_bernoulli(unsigned k);

}  // namespace powsum::oracle
