#ifndef LAGINT_LAGUERRE_HPP
#define LAGINT_LAGUERRE_HPP

#include "lagint/poly.hpp"

namespace lagint {

/// Index (n, alpha) of a generalized Laguerre polynomial L_n^alpha with
/// integer superscript alpha >= -n.
struct LaguerreIndex {
    int n;
    int alpha = 0;
};

inline constexpr int kMaxLaguerreDegree = 20;
inline constexpr int kMaxLaguerreAlpha = 24;

/// Throws std::invalid_argument outside n in [0, 20], |alpha| <= 24, alpha >= -n.
void validate(LaguerreIndex idx);

/// Exact coefficient vector of L_n^alpha: c_j = (-1)^j binom(n+alpha, n-j) / j!.
RationalPoly laguerre_coeffs(LaguerreIndex idx);

/// Horner evaluation in double precision.
double laguerre_eval(LaguerreIndex idx, double x);

/// Exact rational evaluation.
Rational laguerre_eval_exact(LaguerreIndex idx, const Rational& x);

/// L_n^{-m}(x) = (-x)^m (n-m)!/n! L_{n-m}^m(x) for 1 <= m <= n.
/// idx.alpha must be negative; equals laguerre_eval(idx, x) for all x.
double negative_alpha_rewrite(LaguerreIndex idx, double x);
Rational negative_alpha_rewrite_exact(LaguerreIndex idx, const Rational& x);

} // namespace lagint

#endif
