#include "lagint/engines.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>

namespace lagint {

namespace {

double pow_int(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

Rational pow_int(const Rational& base, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Reduced form of Eq-style parameters: I_{n,k} = pref * (st)^kappa *
// L_nu^kappa(s^2) L_nu^kappa(t^2). For k >= 0 this is the closed form as
// stated; for -n <= k < 0 it is the alpha<0 rewrite, with all negative
// powers of st absorbed.
struct ReducedForm {
    int nu;
    int kappa;
    int sign; // +1 or -1
};

ReducedForm reduce(int n, int k) {
    if (k >= 0) return {n, k, k % 2 == 0 ? 1 : -1};
    const int m = -k;
    return {n - m, m, m % 2 == 0 ? 1 : -1};
}

// The factorial ratio as a running product, never via separate factorials.
// k >= 0: n!/(n+k)!; k < 0: (n+k)!/n!  (both are the prefactor magnitudes
// of the two branches of reduce()).
double factorial_ratio(int n, int k) {
    double r = 1.0;
    if (k >= 0)
        for (int i = n + 1; i <= n + k; ++i) r /= i;
    else
        for (int i = n + k + 1; i <= n; ++i) r /= i;
    return r;
}

Rational factorial_ratio_exact(int n, int k) {
    Rational r = 1;
    if (k >= 0)
        for (int i = n + 1; i <= n + k; ++i) r /= i;
    else
        for (int i = n + k + 1; i <= n; ++i) r /= i;
    return r;
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

} // namespace

void validate(const IntegralParams& p) {
    require(p.n >= 0 && p.n <= kMaxIntegralDegree, "IntegralParams: n out of range");
    require(std::abs(p.k) <= kMaxFourierIndex, "IntegralParams: |k| out of range");
    require(std::isfinite(p.s) && std::abs(p.s) <= kMaxArgMagnitude,
            "IntegralParams: s out of range");
    require(std::isfinite(p.t) && std::abs(p.t) <= kMaxArgMagnitude,
            "IntegralParams: t out of range");
    require(p.alpha == 0 || p.alpha == 1, "IntegralParams: alpha must be 0 or 1");
}

int default_node_count(const IntegralParams& p) {
    int m = 4 * (p.n + std::abs(p.k)) +
            static_cast<int>(std::ceil(3.0 * std::abs(p.s * p.t))) + 32;
    if (m % 2 != 0) ++m;
    return std::max(64, m);
}

double closed_form(const IntegralParams& p) {
    validate(p);
    require(p.alpha == 0, "closed_form: only the alpha=0 integral has a closed form");
    if (p.k < -p.n) return 0.0;

    const auto [nu, kappa, sign] = reduce(p.n, p.k);
    const double pref = sign * factorial_ratio(p.n, p.k);
    const double st = p.s * p.t;
    // symmetrized evaluation order: swapping s and t only swaps the factors
    // of a product, which is bitwise commutative
    const double ls = laguerre_eval({nu, kappa}, p.s * p.s);
    const double lt = laguerre_eval({nu, kappa}, p.t * p.t);
    const double value = pref * pow_int(st, kappa) * (ls * lt);

#ifndef NDEBUG
    // cross-check the rewrite against the literal (st)^k expression
    if (p.k < 0 && st != 0.0) {
        const double direct = (p.k % 2 == 0 ? 1.0 : -1.0) * factorial_ratio(p.n, p.k) *
                              std::pow(st, p.k) *
                              laguerre_eval({p.n, p.k}, p.s * p.s) *
                              laguerre_eval({p.n, p.k}, p.t * p.t);
        assert(std::abs(direct - value) <= 1e-12 * std::max(1.0, std::abs(value)));
    }
#endif
    return value;
}

Rational closed_form_exact(int n, int k, const Rational& s, const Rational& t) {
    validate({n, k, to_double(s), to_double(t), 0});
    if (k < -n) return 0;
    const auto [nu, kappa, sign] = reduce(n, k);
    const Rational pref = Rational(sign) * factorial_ratio_exact(n, k);
    const Rational ls = laguerre_eval_exact({nu, kappa}, s * s);
    const Rational lt = laguerre_eval_exact({nu, kappa}, t * t);
    return pref * pow_int(s * t, kappa) * (ls * lt);
}

double closed_form_d_ds(const IntegralParams& p) {
    validate(p);
    require(p.alpha == 0, "closed_form_d_ds: alpha must be 0");
    require(p.k >= -p.n, "closed_form_d_ds: k < -n branch is identically 0");

    const auto [nu, kappa, sign] = reduce(p.n, p.k);
    const double pref = sign * factorial_ratio(p.n, p.k);
    const double lt = laguerre_eval({nu, kappa}, p.t * p.t);
    const double ls = laguerre_eval({nu, kappa}, p.s * p.s);
    // d/ds L_nu^kappa(s^2) = 2s * (-L_{nu-1}^{kappa+1}(s^2))
    const double dls =
        (nu >= 1) ? -2.0 * p.s * laguerre_eval({nu - 1, kappa + 1}, p.s * p.s) : 0.0;
    const double power_term =
        (kappa >= 1) ? kappa * pow_int(p.s, kappa - 1) * ls : 0.0;
    return pref * pow_int(p.t, kappa) * lt * (power_term + pow_int(p.s, kappa) * dls);
}

double closed_form_d_dt(const IntegralParams& p) {
    // I_{n,k} is symmetric under s <-> t
    return closed_form_d_ds({p.n, p.k, p.t, p.s, p.alpha});
}

std::complex<double> quadrature_integral(const IntegralParams& p, const QuadratureConfig& cfg) {
    validate(p);
    require(cfg.nodes >= 16 && cfg.nodes % 2 == 0, "QuadratureConfig: need even M >= 16");

    const auto coeffs = laguerre_coeffs({p.n, p.alpha}).coeffs_as_double();
    const double st = p.s * p.t;
    const double ss_tt = p.s * p.s + p.t * p.t;
    const int M = cfg.nodes;

    // extended-precision accumulation keeps the residual imaginary part of
    // this real-valued integral near the 1e-15 level
    long double acc_re = 0.0L, acc_im = 0.0L;
    for (int j = 0; j < M; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / M;
        const double c = std::cos(theta), si = std::sin(theta);
        double lag = 0.0;
        const double x = ss_tt + 2.0 * st * c;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) lag = lag * x + *it;
        // e^{-ik theta} * exp(-st e^{i theta})
        const double mod = std::exp(-st * c);
        const double phase = -p.k * theta - st * si;
        acc_re += lag * mod * std::cos(phase);
        acc_im += lag * mod * std::sin(phase);
    }
    const std::complex<double> result(static_cast<double>(acc_re / M),
                                      static_cast<double>(acc_im / M));
    if (std::abs(result.imag()) > cfg.tol_imag) {
        char msg[128];
        std::snprintf(msg, sizeof msg,
                      "quadrature_integral: |Im| = %.3g exceeds tol %.3g; "
                      "increase node count",
                      std::abs(result.imag()), cfg.tol_imag);
        throw NumericalInconsistency(msg);
    }
    return result;
}

std::complex<double> quadrature_integral(const IntegralParams& p) {
    return quadrature_integral(p, QuadratureConfig{default_node_count(p)});
}

Rational residue_exact(int n, int k, int alpha, const Rational& s, const Rational& t) {
    validate({n, k, to_double(s), to_double(t), alpha});
    if (k < -n) return 0;

    const Rational st = s * t;
    LaurentPoly arg = LaurentPoly::monomial(st, 1) +
                      LaurentPoly::constant(s * s + t * t) +
                      LaurentPoly::monomial(st, -1);
    const LaurentPoly lag = compose(laguerre_coeffs({n, alpha}), arg);

    // coefficient of z^k in lag(z) * sum_j (-st z)^j / j!; the Laurent factor
    // has exponents in [-n, n], so only j <= n+k contribute
    Rational res = 0;
    Rational term = 1; // (-st)^j / j!
    for (int j = 0; j <= n + k; ++j) {
        if (j > 0) term *= -st / j;
        if (k - j <= n) res += term * lag.coeff(k - j);
    }
    return res;
}

} // namespace lagint
