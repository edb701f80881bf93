#include <doctest.h>

#include "generators.hpp"
#include "powsum/polynomial.hpp"

using powsum::Polynomial;
using R = powsum::Rational;

namespace {

const Polynomial n = Polynomial::identity();

}  // namespace

TEST_CASE("trailing zeros are trimmed") {
    const Polynomial p{R(1), R(0), R(0)};
    CHECK(p.degree() == 0u);
    CHECK(p.coefficients().size() == 1);
    CHECK(Polynomial{R(0)}.is_zero());
    CHECK_FALSE(Polynomial{}.degree().has_value());
    CHECK(Polynomial{}.coefficient(3) == R(0));
}

TEST_CASE("add, scale, mul") {
    // n^2 + 1 plus -n^2
    CHECK(Polynomial{R(1), R(0), R(1)} + Polynomial{R(0), R(0), R(-1)} == Polynomial{R(1)});
    CHECK(scale(Polynomial{R(4), R(2)}, R(1, 2)) == Polynomial{R(2), R(1)});
    CHECK(scale(Polynomial{R(4), R(2)}, R(0)).is_zero());
    const Polynomial n_plus_1{R(1), R(1)};
    CHECK(n_plus_1 * n_plus_1 == Polynomial{R(1), R(2), R(1)});
    CHECK((n_plus_1 * Polynomial{}).is_zero());
}

TEST_CASE("pow") {
    CHECK(pow(n, 3) == Polynomial::monomial(R(1), 3));
    CHECK(pow(Polynomial{R(1), R(1)}, 2) == Polynomial{R(1), R(2), R(1)});
    CHECK(pow(Polynomial{}, 0) == Polynomial{R(1)});
    CHECK(pow(Polynomial{}, 3).is_zero());
}

TEST_CASE("differentiate") {
    // n^3/3 + n^2/2 + n/6 -> n^2 + n + 1/6
    CHECK(differentiate(Polynomial{R(0), R(1, 6), R(1, 2), R(1, 3)}) == Polynomial{R(1, 6), R(1), R(1)});
    CHECK(differentiate(Polynomial{R(5)}).is_zero());
    CHECK(differentiate(Polynomial{}).is_zero());
    // n^4/4 + n^3/2 + n^2/4 -> n^3 + 3n^2/2 + n/2
    CHECK(differentiate(Polynomial{R(0), R(0), R(1, 4), R(1, 2), R(1, 4)}) ==
          Polynomial{R(0), R(1, 2), R(3, 2), R(1)});
}

TEST_CASE("antidifferentiate") {
    CHECK(antidifferentiate(Polynomial{R(1), R(2)}) == Polynomial{R(0), R(1), R(1)});
    CHECK(antidifferentiate(Polynomial{R(1, 6), R(1), R(1)}) == Polynomial{R(0), R(1, 6), R(1, 2), R(1, 3)});
    CHECK(antidifferentiate(Polynomial{}).is_zero());
}

TEST_CASE("evaluate") {
    const Polynomial sum_of_squares{R(0), R(1, 6), R(1, 2), R(1, 3)};
    CHECK(evaluate(sum_of_squares, R(1)) == R(1));
    CHECK(evaluate(sum_of_squares, R(4)) == R(30));  // 1 + 4 + 9 + 16
    CHECK(evaluate(Polynomial{R(-3, 7), R(5)}, R(0)) == R(-3, 7));
    CHECK(evaluate(Polynomial{}, R(9)) == R(0));
}

TEST_CASE("compose") {
    const Polynomial n_minus_1{R(-1), R(1)};
    CHECK(compose(pow(n, 2), n_minus_1) == Polynomial{R(1), R(-2), R(1)});
    // n(n+1)/2 at n-1 is (n-1)n/2
    CHECK(compose(Polynomial{R(0), R(1, 2), R(1, 2)}, n_minus_1) == Polynomial{R(0), R(-1, 2), R(1, 2)});
    const Polynomial p{R(3), R(-1, 2), R(0), R(7)};
    CHECK(compose(p, n) == p);
    CHECK(compose(Polynomial{}, n_minus_1).is_zero());
}

TEST_CASE("algebraic properties on random polynomials") {
    powsum::testing::Gen gen(7);
    for (int i = 0; i < 200; ++i) {
        const Polynomial p = gen.polynomial(6);
        const Polynomial q = gen.polynomial(4);
        const Polynomial r = gen.polynomial(3, 4, 3);
        const R x = gen.rational(6, 5);

        CHECK(differentiate(antidifferentiate(p)) == p);
        CHECK(antidifferentiate(p).coefficient(0) == R(0));
        if (!p.is_zero() && !q.is_zero())
            CHECK((p * q).degree() == *p.degree() + *q.degree());
        CHECK(evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x));
        CHECK(evaluate(p + q, x) == evaluate(p, x) + evaluate(q, x));
        CHECK(evaluate(compose(p, r), x) == evaluate(p, evaluate(r, x)));
        CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
        CHECK(pow(q, 3) == q * q * q);
    }
}
