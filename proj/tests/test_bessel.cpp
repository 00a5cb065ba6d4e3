#include <doctest.h>

#include "lagint/bessel.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace lagint;

TEST_CASE("point values") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(3, 0.0) == 0.0);
    CHECK(bessel_j(-2, 1.7) == bessel_j(2, 1.7));
    // classical reference values
    CHECK(bessel_j(0, 1.0) == doctest::Approx(0.7651976865579666).epsilon(1e-14));
    CHECK(bessel_j(1, 2.0) == doctest::Approx(0.5767248077568734).epsilon(1e-14));
}

TEST_CASE("parity and boundedness") {
    for (int m = 0; m <= 12; ++m)
        // the power series keeps full absolute accuracy on this range;
        // past |x| ~ 30 the alternating cancellation eats into it
        for (double x : {-20.0, -9.5, -3.2, -0.7, 0.0, 1.3, 6.8, 15.0, 25.0}) {
            const double jm = bessel_j(m, x);
            const double jneg = bessel_j(-m, x);
            CHECK(jneg == (m % 2 != 0 ? -jm : jm));
            CHECK(std::abs(jm) <= 1.0);
        }
}

TEST_CASE("argument and order bounds") {
    CHECK_THROWS_AS(bessel_j(0, 51.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_j(129, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_j(0, std::nan("")), std::invalid_argument);
}

TEST_CASE("alternating product sum collapses to a delta") {
    auto c = check_bessel_delta(0, 2.0, 40);
    CHECK(c.pass);
    CHECK(c.abs_err <= 1e-12);
    CHECK(c.lhs == doctest::Approx(1.0).epsilon(1e-12));

    c = check_bessel_delta(3, 2.0, 40);
    CHECK(c.pass);
    CHECK(c.abs_err <= 1e-12);

    // x = 0: only the k=0 term survives
    c = check_bessel_delta(0, 0.0, 8);
    CHECK(c.lhs == 1.0);
    CHECK(c.abs_err == 0.0);

    CHECK_THROWS_AS(check_bessel_delta(5, 1.0, 10), std::invalid_argument);
}

TEST_CASE("Fourier-Bessel reconstruction of the exponential") {
    for (double x : {0.5, 2.5, 10.0}) {
        const int L = static_cast<int>(std::ceil(std::numbers::e * x)) + 24;
        for (int i = 0; i < 9; ++i) {
            const double theta = 2.0 * std::numbers::pi * i / 9.0;
            std::complex<double> sum = bessel_j(0, x);
            for (int ell = 1; ell <= L; ++ell) {
                const auto eip = std::polar(1.0, ell * theta);
                const double sign = (ell % 2 != 0) ? -1.0 : 1.0;
                sum += sign * (eip + sign * std::conj(eip)) * bessel_j(ell, x);
            }
            const auto target = std::polar(1.0, -x * std::sin(theta));
            CHECK(std::abs(sum - target) <= 1e-10);
        }
    }
}
