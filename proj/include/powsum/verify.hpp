#pragma once

// Self-verification of derived formulas against the brute-force oracle and
// the telescoping / boundary identities. Stops at the first failure.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "powsum/power_sum.hpp"
#include "powsum/sequence_sum.hpp"

namespace powsum {

using PowerSumFormula = std::function<Polynomial(const ArithmeticSpec&, unsigned)>;
using SequenceSumFormula = std::function<Polynomial(const DifferenceSpec&, unsigned)>;

/// a0 in {0, 1, 2, -1, 1/2, -3/2} crossed with D in {0, 1, 2, 3, -1, 1/3}.
std::vector<ArithmeticSpec> default_spec_grid();
std::vector<DifferenceSpec> default_sequence_grid();

struct VerifyOptions {
    unsigned max_power = 12;
    std::uint64_t max_n = 50;
    /// Sequence sums are checked for m = 1 .. min(max_power, this).
    unsigned max_sequence_power = 4;
    std::vector<ArithmeticSpec> grid = default_spec_grid();
    std::vector<DifferenceSpec> sequence_grid = default_sequence_grid();

    // Formula providers under test. Defaults call derive / derive_sum.
    PowerSumFormula power_sum;
    SequenceSumFormula sequence_sum;
};

struct Counterexample {
    std::string check;    // e.g. "oracle", "telescoping", "boundary S(1)"
    std::string subject;  // the spec, rendered
    unsigned power = 0;
    std::optional<std::uint64_t> n;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::size_t checks = 0;
    std::optional<Counterexample> failure;

    bool passed() const { return !failure.has_value(); }
};

VerifyReport run_verification(const VerifyOptions& options);

std::string describe(const ArithmeticSpec& spec);
std::string describe(const DifferenceSpec& spec);
std::string describe(const Counterexample& c);

}  // namespace powsum
