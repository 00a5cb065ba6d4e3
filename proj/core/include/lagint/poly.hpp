#ifndef LAGINT_POLY_HPP
#define LAGINT_POLY_HPP

#include "lagint/rational.hpp"

#include <vector>

namespace lagint {

/// Dense polynomial with exact rational coefficients, coeffs_[j] <-> x^j.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPoly constant(Rational v);
    static RationalPoly monomial(Rational c, int degree);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int j) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    double eval(double x) const;
    std::vector<double> coeffs_as_double() const;

    RationalPoly derivative() const;
    /// Multiply by x^k, k >= 0.
    RationalPoly shifted(int k) const;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const Rational& s);
    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
    friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

private:
    std::vector<Rational> c_;
    void trim();
};

/// Laurent polynomial over the rationals: coefficients of z^e for
/// e in [low, low + size). Exponents may be negative.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(Rational v);
    static LaurentPoly monomial(Rational c, int exponent);

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    Rational coeff(int exponent) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& s);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

private:
    int low_ = 0;
    std::vector<Rational> c_;
    void trim();
};

/// Horner evaluation of p at a Laurent-polynomial argument.
LaurentPoly compose(const RationalPoly& p, const LaurentPoly& arg);

} // namespace lagint

#endif
