#include "lagint/bessel.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace lagint {

double bessel_j(int m, double x) {
    if (std::abs(m) > kMaxBesselOrder)
        throw std::invalid_argument("bessel_j: order out of range");
    if (!std::isfinite(x) || std::abs(x) > kMaxBesselArg)
        throw std::invalid_argument("bessel_j: argument out of range");

    const int am = std::abs(m);
    const double h = x / 2.0;

    // term_j = (-1)^j h^{2j+|m|} / (j! (j+|m|)!); extended precision buys
    // back some of the alternating-series cancellation at larger |x|
    long double term = 1.0L;
    for (int i = 1; i <= am; ++i) term *= h / i;
    long double sum = term;
    long double mag = std::abs(term);
    const long double hh = static_cast<long double>(h) * h;
    for (int j = 1;; ++j) {
        term *= -hh / (j * (j + am));
        sum += term;
        mag += std::abs(term);
        // relative truncation rule with an absolute floor so x=0 terminates
        if (std::abs(term) <= 1e-18L * mag + 1e-300L) break;
    }
    if (m < 0 && am % 2 != 0) sum = -sum;
    return static_cast<double>(sum);
}

RelationCheck check_bessel_delta(int ell, double x, int K, double abs_tol) {
    if (K < std::abs(ell) + 8)
        throw std::invalid_argument("check_bessel_delta: K too small");
    double sum = 0.0;
    for (int k = -K; k <= K; ++k) {
        double term = bessel_j(ell - k, x) * bessel_j(k, x);
        sum += (k % 2 != 0) ? -term : term;
    }
    const double target = (ell == 0) ? 1.0 : 0.0;
    return make_check(RelationId::BESSEL_DELTA,
                      {{"ell", double(ell)}, {"x", x}, {"K", double(K)}},
                      sum, target, 0.0, abs_tol);
}

} // namespace lagint
