#include <doctest.h>

#include "lagint/poly.hpp"

#include <random>

using namespace lagint;

namespace {

RationalPoly random_poly(std::mt19937_64& rng, int max_deg) {
    std::vector<Rational> c(rng() % (max_deg + 1) + 1);
    for (auto& q : c)
        q = Rational(static_cast<int>(rng() % 41) - 20, static_cast<int>(rng() % 7) + 1);
    return RationalPoly(std::move(c));
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
    const RationalPoly one_plus_x({Rational(1), Rational(1)});
    const RationalPoly one_minus_x({Rational(1), Rational(-1)});
    const RationalPoly prod = one_plus_x * one_minus_x;
    CHECK(prod.degree() == 2);
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);
    CHECK(prod.coeff(2) == -1);

    CHECK(prod.eval(Rational(1, 2)) == Rational(3, 4));
    CHECK(prod.eval(0.5) == doctest::Approx(0.75));

    const RationalPoly d = prod.derivative();
    CHECK(d.degree() == 1);
    CHECK(d.coeff(1) == -2);

    CHECK((one_plus_x - one_plus_x).is_zero());
    CHECK(one_plus_x.shifted(2).coeff(3) == 1);
    CHECK(one_plus_x.shifted(2).coeff(0) == 0);
}

TEST_CASE("polynomial ring properties (randomized)") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        const auto p = random_poly(rng, 5);
        const auto q = random_poly(rng, 5);
        const auto r = random_poly(rng, 5);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        const Rational x(static_cast<int>(rng() % 17) - 8, 3);
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        CHECK((p + q).derivative() == p.derivative() + q.derivative());
    }
}

TEST_CASE("Laurent polynomials") {
    // z + c + z^{-1}
    const LaurentPoly a = LaurentPoly::monomial(Rational(2), 1) +
                          LaurentPoly::constant(Rational(3)) +
                          LaurentPoly::monomial(Rational(2), -1);
    CHECK(a.low() == -1);
    CHECK(a.high() == 1);
    CHECK(a.coeff(0) == 3);
    CHECK(a.coeff(5) == 0);

    const LaurentPoly sq = a * a;
    CHECK(sq.low() == -2);
    CHECK(sq.high() == 2);
    CHECK(sq.coeff(0) == 17); // 2*2 + 3*3 + 2*2
    CHECK(sq.coeff(1) == 12);
    CHECK(sq.coeff(-2) == 4);

    // compose: p(y) = 1 - y at y = z + 1/z
    const RationalPoly p({Rational(1), Rational(-1)});
    const LaurentPoly arg = LaurentPoly::monomial(Rational(1), 1) +
                            LaurentPoly::monomial(Rational(1), -1);
    const LaurentPoly c = compose(p, arg);
    CHECK(c.coeff(0) == 1);
    CHECK(c.coeff(1) == -1);
    CHECK(c.coeff(-1) == -1);
}

TEST_CASE("Laurent cancellation renormalizes bounds") {
    const LaurentPoly a = LaurentPoly::monomial(Rational(1), -3);
    const LaurentPoly b = LaurentPoly::monomial(Rational(-1), -3) +
                          LaurentPoly::monomial(Rational(5), 2);
    const LaurentPoly sum = a + b;
    CHECK(sum.low() == 2);
    CHECK(sum.high() == 2);
    CHECK(sum.coeff(2) == 5);
}
