#include "powsum/verify.hpp"

#include <algorithm>

#include "powsum/oracle.hpp"
#include "powsum/render.hpp"

namespace powsum {

namespace {

const Polynomial& n_minus_one() {
    static const Polynomial p{Rational(-1), Rational(1)};
    return p;
}

class Checker {
public:
    explicit Checker(VerifyReport& report) : report_(report) {}

    bool failed() const { return report_.failure.has_value(); }

    void expect_equal(const Rational& expected, const Rational& got, const char* check, const std::string& subject,
                      unsigned m, std::optional<std::uint64_t> n) {
        ++report_.checks;
        if (expected != got)
            report_.failure = Counterexample{check, subject, m, n, expected.to_string(), got.to_string()};
    }

    void expect_zero(const Polynomial& residual, const char* check, const std::string& subject, unsigned m) {
        ++report_.checks;
        if (!residual.is_zero())
            report_.failure = Counterexample{check, subject, m, std::nullopt, "0",
                                             render_polynomial(residual, RenderStyle::plain)};
    }

private:
    VerifyReport& report_;
};

void check_power_sums(const VerifyOptions& options, const PowerSumFormula& formula_of, Checker& check) {
    for (const auto& spec : options.grid) {
        const std::string subject = describe(spec);
        const Polynomial x = spec.term_polynomial();
        for (unsigned m = 0; m <= options.max_power; ++m) {
            const Polynomial s = formula_of(spec, m);

            check.expect_equal(Rational(0), evaluate(s, Rational(0)), "boundary S(0)", subject, m, 0);
            if (check.failed())
                return;
            check.expect_equal(pow(spec.a0, m), evaluate(s, Rational(1)), "boundary S(1)", subject, m, 1);
            if (check.failed())
                return;
            check.expect_zero(s - compose(s, n_minus_one()) - pow(x, m), "telescoping", subject, m);
            if (check.failed())
                return;

            for (std::uint64_t n = 0; n <= options.max_n; ++n) {
                const Rational at(static_cast<std::int64_t>(n));
                check.expect_equal(oracle::brute_sum(spec, m, n), evaluate(s, at), "oracle", subject, m, n);
                if (check.failed())
                    return;
            }
        }
    }
}

void check_sequence_sums(const VerifyOptions& options, const SequenceSumFormula& formula_of, Checker& check) {
    const unsigned top = std::min(options.max_power, options.max_sequence_power);
    for (const auto& spec : options.sequence_grid) {
        const std::string subject = describe(spec);
        const Polynomial x = general_term(spec).term;

        check.expect_equal(spec.a0, evaluate(x, Rational(1)), "general term x(1)", subject, 1, 1);
        if (check.failed())
            return;
        check.expect_zero(compose(x, Polynomial{Rational(1), Rational(1)}) - x - spec.diff, "general term difference",
                          subject, 1);
        if (check.failed())
            return;

        for (unsigned m = 1; m <= top; ++m) {
            const Polynomial s = formula_of(spec, m);

            check.expect_equal(Rational(0), evaluate(s, Rational(0)), "boundary S(0)", subject, m, 0);
            if (check.failed())
                return;
            check.expect_zero(s - compose(s, n_minus_one()) - pow(x, m), "telescoping", subject, m);
            if (check.failed())
                return;

            for (std::uint64_t n = 0; n <= options.max_n; ++n) {
                const Rational at(static_cast<std::int64_t>(n));
                check.expect_equal(oracle::brute_seq_sum(spec, m, n), evaluate(s, at), "oracle", subject, m, n);
                if (check.failed())
                    return;
            }
        }
    }
}

}  // namespace

std::vector<ArithmeticSpec> default_spec_grid() {
    const std::vector<Rational> starts{Rational(0), Rational(1), Rational(2), Rational(-1), Rational(1, 2),
                                       Rational(-3, 2)};
    const std::vector<Rational> steps{Rational(0), Rational(1), Rational(2), Rational(3), Rational(-1), Rational(1, 3)};
    std::vector<ArithmeticSpec> grid;
    for (const auto& a0 : starts)
        for (const auto& d : steps)
            grid.push_back({a0, d});
    return grid;
}

std::vector<DifferenceSpec> default_sequence_grid() {
    return {
        {Rational(7), Polynomial{}},
        {Rational(1), Polynomial{Rational(1)}},
        {Rational(1), Polynomial{Rational(0), Rational(1)}},
        {Rational(0), Polynomial{Rational(0), Rational(0), Rational(0), Rational(1)}},
        {Rational(2), Polynomial{Rational(1), Rational(1), Rational(1), Rational(1)}},
        {Rational(-1, 2), Polynomial{Rational(1), Rational(-1, 2), Rational(1, 3)}},
        {Rational(0), Polynomial{Rational(-1, 2), Rational(0), Rational(1), Rational(0), Rational(1, 4)}},
        {Rational(3, 2), Polynomial{Rational(-2), Rational(1, 5)}},
    };
}

VerifyReport run_verification(const VerifyOptions& options) {
    const PowerSumFormula power_sum = options.power_sum
        ? options.power_sum
        : PowerSumFormula([](const ArithmeticSpec& s, unsigned m) { return derive(s, m).formula; });
    const SequenceSumFormula sequence_sum = options.sequence_sum
        ? options.sequence_sum
        : SequenceSumFormula([](const DifferenceSpec& s, unsigned m) { return derive_sum(s, m).formula; });

    VerifyReport report;
    Checker check(report);
    check_power_sums(options, power_sum, check);
    if (!check.failed())
        check_sequence_sums(options, sequence_sum, check);
    return report;
}

std::string describe(const ArithmeticSpec& spec) {
    return "(a0=" + spec.a0.to_string() + ", D=" + spec.d.to_string() + ")";
}

std::string describe(const DifferenceSpec& spec) {
    return "(a0=" + spec.a0.to_string() + ", D(n)=" + render_polynomial(spec.diff, RenderStyle::plain) + ")";
}

std::string describe(const Counterexample& c) {
    std::string out = "counterexample: check=" + c.check + " spec=" + c.subject + " m=" + std::to_string(c.power);
    if (c.n)
        out += " n=" + std::to_string(*c.n);
    out += " expected=" + c.expected + " got=" + c.got;
    return out;
}

}  // namespace powsum
