#ifndef LAGINT_ENGINES_HPP
#define LAGINT_ENGINES_HPP

#include "lagint/laguerre.hpp"

#include <complex>
#include <stdexcept>

namespace lagint {

/// One integral instance I_{n,k}(s,t); alpha = 1 selects the L_n^1 integrand.
struct IntegralParams {
    int n;
    int k;
    double s;
    double t;
    int alpha = 0;
};

inline constexpr int kMaxIntegralDegree = 20;
inline constexpr int kMaxFourierIndex = 24;
inline constexpr double kMaxArgMagnitude = 6.0;

void validate(const IntegralParams& p);

/// Equispaced-node count and imaginary-part tolerance for the periodic
/// trapezoid rule. M must be even and >= 16.
struct QuadratureConfig {
    int nodes;
    double tol_imag = 1e-11;
};

/// max(64, next even >= 4(n+|k|) + ceil(3|st|) + 32); the integrand is a
/// trigonometric polynomial times an entire function of e^{i theta}, so the
/// rule converges geometrically once M clears the bandwidth.
int default_node_count(const IntegralParams& p);

/// Quadrature produced an imaginary part above tolerance: M is too small.
struct NumericalInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// (-1)^k n!/(n+k)! (st)^k L_n^k(s^2) L_n^k(t^2) for k >= -n, else 0.
/// Negative k is routed through the alpha<0 rewrite, so the value is a
/// polynomial in s,t and stays finite at st = 0. Requires alpha = 0.
double closed_form(const IntegralParams& p);

/// Exact-rational twin of closed_form.
Rational closed_form_exact(int n, int k, const Rational& s, const Rational& t);

/// Analytic partial derivatives of closed_form (alpha = 0, k >= -n).
double closed_form_d_ds(const IntegralParams& p);
double closed_form_d_dt(const IntegralParams& p);

/// Periodic trapezoid rule at cfg.nodes equispaced theta samples.
/// Throws NumericalInconsistency when |Im| > cfg.tol_imag.
std::complex<double> quadrature_integral(const IntegralParams& p, const QuadratureConfig& cfg);
std::complex<double> quadrature_integral(const IntegralParams& p);

/// Coefficient of z^k in L_n^alpha(s^2+t^2+st(z+1/z)) e^{-stz}, i.e. the
/// residue at z=0 of the circle-contour integrand. Exact; returns 0 for
/// k < -n. The exponential series is cut at degree n+k, which already
/// carries every contribution to the z^k coefficient.
Rational residue_exact(int n, int k, int alpha, const Rational& s, const Rational& t);

} // namespace lagint

#endif
