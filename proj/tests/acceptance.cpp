// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "lagint/suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

using namespace lagint;

namespace {

int g_failures = 0;

void report(int idx, const char* what, bool ok) {
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx, what);
    if (!ok) ++g_failures;
}

// 1. The residue extraction and the closed form agree exactly, including the
//    vanishing branch k < -n, over a rational parameter box.
bool residue_matches_closed_form() {
    const Rational svals[] = {Rational(-2), Rational(-5, 4), Rational(-1, 3),
                              Rational(1, 2), Rational(7, 4)};
    const Rational tvals[] = {Rational(-9, 8), Rational(-2, 5), Rational(1, 4),
                              Rational(1), Rational(15, 8)};
    for (int n = 0; n <= 6; ++n)
        for (int k = -n - 3; k <= 8; ++k)
            for (const auto& s : svals)
                for (const auto& t : tvals)
                    if (residue_exact(n, k, 0, s, t) != closed_form_exact(n, k, s, t))
                        return false;
    return true;
}

// 2. Quadrature reproduces the closed form to 1e-10 relative accuracy with a
//    residual imaginary part below 1e-11, on a signed grid plus random points.
bool quadrature_matches_closed_form() {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            pts.emplace_back(-2.4 + 0.8 * i, -2.4 + 0.8 * j);
    std::mt19937_64 rng(2024);
    auto u = [&rng] { return (rng() >> 11) * 0x1.0p-53 * 4.8 - 2.4; };
    for (int i = 0; i < 100; ++i) pts.emplace_back(u(), u());

    for (int n = 0; n <= 8; ++n)
        for (int k = -10; k <= 10; ++k)
            for (const auto& [s, t] : pts) {
                const double cf = closed_form({n, k, s, t});
                const auto q = quadrature_integral({n, k, s, t});
                if (std::abs(q.real() - cf) > 1e-10 * std::max(1.0, std::abs(cf)))
                    return false;
                if (std::abs(q.imag()) > 1e-11) return false;
            }
    return true;
}

// 3. The k < -n branch vanishes: numerically to 1e-12 and exactly in the
//    rational engine, at 200 sampled parameter points.
bool vanishing_branch() {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = static_cast<int>(rng() % 9);
        const int k = -n - 1 - static_cast<int>(rng() % 6);
        if (k < -24) continue;
        const Rational s(static_cast<int>(rng() % 65) - 32, 16);
        const Rational t(static_cast<int>(rng() % 65) - 32, 16);
        if (residue_exact(n, k, 0, s, t) != 0) return false;
        const auto q = quadrature_integral({n, k, to_double(s), to_double(t)});
        if (std::abs(q) > 1e-12) return false;
    }
    return true;
}

// 4. Base case n = 0: I_{0,k} = (-1)^k (st)^k / k!, exactly.
bool base_case() {
    const std::pair<Rational, Rational> pts[] = {
        {Rational(1, 2), Rational(3, 4)}, {Rational(-2, 3), Rational(5, 4)},
        {Rational(7, 5), Rational(-1, 3)}, {Rational(2), Rational(-3, 2)}};
    for (const auto& [s, t] : pts)
        for (int k = 0; k <= 10; ++k) {
            Rational expected = 1;
            for (int j = 1; j <= k; ++j) expected *= -(s * t) / j;
            if (closed_form_exact(0, k, s, t) != expected) return false;
            if (residue_exact(0, k, 0, s, t) != expected) return false;
        }
    return true;
}

// 5. The three Laguerre recurrences hold exactly (zero tolerance) for every
//    degree m <= 12 and every integer parameter -m <= k <= 12.
bool laguerre_recurrences() {
    for (int m = 0; m <= 12; ++m)
        for (int k = -m; k <= 12; ++k)
            for (const auto& c : check_laguerre_recurrences(m, k))
                if (!c.pass || !c.exact || c.abs_err != 0.0) return false;
    return true;
}

// 6. The differential relation and the five integral relations hold at
//    rel_tol 1e-9 on the default positive-quadrant grid, with zero failures.
bool differential_and_integral_relations() {
    const auto grid = SuiteConfig::default_grid();
    for (const auto& [s, t] : grid) {
        for (int n = 0; n <= 4; ++n)
            for (int k = -n; k <= 6; ++k)
                if (!check_diffeq(n, k, s, t, 1e-9, 1e-12).pass) return false;
        for (int n = 0; n <= 4; ++n)
            for (int k = -6; k <= 6; ++k)
                for (const auto& c : check_integral_relations(n, k, s, t, 1e-9, 1e-12))
                    if (!c.pass) return false;
    }
    return true;
}

// 7. The top Taylor coefficient identity holds exactly for n <= 5, -n <= k <= 6.
bool top_coefficient() {
    for (int n = 0; n <= 5; ++n)
        for (int k = -n; k <= 6; ++k) {
            const auto c = check_top_coefficient(n, k);
            if (!c.pass || !c.exact) return false;
        }
    return true;
}

// 8. The cosine-kernel byproduct series matches its integral to 1e-9
//    relative accuracy at 20 nonzero points, negative arguments included.
bool byproduct_series() {
    const std::pair<double, double> pts[] = {
        {0.3, 0.4},   {0.7, 0.5},   {1.0, 1.0},   {1.3, 0.8},  {1.7, 1.1},
        {2.2, 0.6},   {0.9, 2.1},   {1.5, 1.5},   {-0.5, 0.7}, {-1.2, 1.0},
        {0.8, -1.4},  {-1.0, -1.0}, {-2.0, 0.9},  {0.4, -2.2}, {-1.6, -1.3},
        {2.0, 2.0},   {-0.3, -0.4}, {1.9, -1.8},  {-2.1, 1.7}, {0.6, 0.9}};
    for (int n = 0; n <= 6; ++n)
        for (const auto& [s, t] : pts) {
            const auto c = check_byproduct(n, s, t, 80, 1e-9);
            if (!c.pass || c.inconclusive) return false;
        }
    return true;
}

// 9. The addition formula holds to 1e-9 relative accuracy for n <= 6 over an
//    eight-point angle grid and ten argument pairs with |xy| >= 0.1.
bool addition_formula() {
    const std::pair<double, double> pts[] = {
        {0.5, 0.4},  {1.0, 1.0},  {0.8, 1.6},  {1.4, 0.9},  {2.0, 1.1},
        {0.35, 0.3}, {1.8, 1.8},  {2.3, 0.7},  {0.6, 2.1},  {1.2, 1.5}};
    for (int n = 0; n <= 6; ++n)
        for (const auto& [x, y] : pts)
            for (int j = 0; j < 8; ++j) {
                const double theta = std::numbers::pi * (2.0 * j + 1.0) / 8.0;
                const auto c = check_bateman(n, x, y, theta, 80, 1e-9);
                if (!c.pass || c.inconclusive) return false;
            }
    return true;
}

// 10. The alternating Bessel product sum collapses to a Kronecker delta to
//     1e-11 absolute accuracy for ell <= 6, x <= 10, at truncation K = 60.
bool bessel_delta() {
    for (int ell = 0; ell <= 6; ++ell)
        for (double x : {0.0, 0.5, 1.0, 2.0, 3.5, 5.0, 7.5, 10.0}) {
            const auto c = check_bessel_delta(ell, x, 60, 1e-11);
            if (!c.pass || c.abs_err > 1e-11) return false;
        }
    return true;
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    report(1, "residue extraction equals exact closed form over a rational box",
           residue_matches_closed_form());
    report(2, "quadrature matches the closed form to 1e-10 with |Im| <= 1e-11",
           quadrature_matches_closed_form());
    report(3, "k < -n branch vanishes numerically and exactly",
           vanishing_branch());
    report(4, "n = 0 base case evaluates to (-1)^k (st)^k / k! exactly",
           base_case());
    report(5, "Laguerre recurrences hold exactly at zero tolerance",
           laguerre_recurrences());
    report(6, "differential and integral relations clean at rel_tol 1e-9",
           differential_and_integral_relations());
    report(7, "top Taylor coefficient identity holds exactly",
           top_coefficient());
    report(8, "cosine-kernel byproduct series matches to 1e-9",
           byproduct_series());
    report(9, "addition formula matches to 1e-9 over the angle grid",
           addition_formula());
    report(10, "alternating Bessel sum collapses to a delta within 1e-11",
           bessel_delta());
    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::printf("acceptance: %d/10 passed (%.0f ms)\n", 10 - g_failures, ms);
    return g_failures == 0 ? 0 : 1;
}
