#ifndef LAGINT_BESSEL_HPP
#define LAGINT_BESSEL_HPP

#include "lagint/relation.hpp"

namespace lagint {

inline constexpr int kMaxBesselOrder = 128;
inline constexpr double kMaxBesselArg = 50.0;

/// Integer-order Bessel function of the first kind, ascending power series.
/// Valid for |m| <= 128, |x| <= 50; J_{-m}(x) = (-1)^m J_m(x).
double bessel_j(int m, double x);

/// Partial sum of sum_k (-1)^k J_{ell-k}(x) J_k(x) over k in [-K, K],
/// compared against delta_{ell,0}. Requires K >= |ell| + 8.
RelationCheck check_bessel_delta(int ell, double x, int K, double abs_tol = 1e-11);

} // namespace lagint

#endif
