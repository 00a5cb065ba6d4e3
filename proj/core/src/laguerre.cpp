#include "lagint/laguerre.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lagint {

void validate(LaguerreIndex idx) {
    if (idx.n < 0 || idx.n > kMaxLaguerreDegree)
        throw std::invalid_argument("LaguerreIndex: n out of range [0, " +
                                    std::to_string(kMaxLaguerreDegree) + "]");
    if (idx.alpha < -idx.n)
        throw std::invalid_argument("LaguerreIndex: alpha < -n leaves the polynomial family");
    if (idx.alpha > kMaxLaguerreAlpha || idx.alpha < -kMaxLaguerreAlpha)
        throw std::invalid_argument("LaguerreIndex: |alpha| exceeds bound");
}

RationalPoly laguerre_coeffs(LaguerreIndex idx) {
    validate(idx);
    std::vector<Rational> c(idx.n + 1);
    Integer jfact = 1;
    for (int j = 0; j <= idx.n; ++j) {
        if (j > 0) jfact *= j;
        Integer b = binomial(idx.n + idx.alpha, idx.n - j);
        if (j % 2 != 0) b = -b;
        c[j] = Rational(b, jfact);
    }
    return RationalPoly(std::move(c));
}

double laguerre_eval(LaguerreIndex idx, double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("laguerre_eval: non-finite x");
    return laguerre_coeffs(idx).eval(x);
}

Rational laguerre_eval_exact(LaguerreIndex idx, const Rational& x) {
    return laguerre_coeffs(idx).eval(x);
}

namespace {

void check_rewrite_index(LaguerreIndex idx) {
    validate(idx);
    if (idx.alpha >= 0)
        throw std::invalid_argument("negative_alpha_rewrite: alpha must be negative");
}

} // namespace

double negative_alpha_rewrite(LaguerreIndex idx, double x) {
    check_rewrite_index(idx);
    if (!std::isfinite(x)) throw std::invalid_argument("negative_alpha_rewrite: non-finite x");
    const int m = -idx.alpha;
    double ratio = 1.0; // (n-m)!/n!
    for (int i = idx.n - m + 1; i <= idx.n; ++i) ratio /= i;
    return std::pow(-x, m) * ratio * laguerre_eval({idx.n - m, m}, x);
}

Rational negative_alpha_rewrite_exact(LaguerreIndex idx, const Rational& x) {
    check_rewrite_index(idx);
    const int m = -idx.alpha;
    Rational ratio = 1;
    for (int i = idx.n - m + 1; i <= idx.n; ++i) ratio /= i;
    Rational xm = 1;
    for (int i = 0; i < m; ++i) xm *= -x;
    return xm * ratio * laguerre_eval_exact({idx.n - m, m}, x);
}

} // namespace lagint
