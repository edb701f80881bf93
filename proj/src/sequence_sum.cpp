#include "powsum/sequence_sum.hpp"

#include <stdexcept>

#include "powsum/power_sum.hpp"

namespace powsum {

Polynomial summation_operator(const Polynomial& p) {
    const ArithmeticSpec unit{Rational(1), Rational(1)};
    const auto coeffs = p.coefficients();
    Polynomial result;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero())
            continue;
        result += derive(unit, static_cast<unsigned>(j)).formula * coeffs[j];
    }
    return result;
}

GeneralTerm general_term(const DifferenceSpec& spec) {
    // a0 + (sum of D up to index n-1)
    const Polynomial n_minus_one{Rational(-1), Rational(1)};
    Polynomial term = compose(summation_operator(spec.diff), n_minus_one);
    term += Polynomial::constant(spec.a0);
    return GeneralTerm{spec, std::move(term)};
}

SequenceSum derive_sum(const DifferenceSpec& spec, unsigned m) {
    if (m == 0)
        throw std::invalid_argument("derive_sum needs power m >= 1");
    const GeneralTerm x = general_term(spec);
    return SequenceSum{spec, m, summation_operator(pow(x.term, m))};
}

}  // namespace powsum
