#ifndef LAGINT_SUITE_HPP
#define LAGINT_SUITE_HPP

#include "lagint/bessel.hpp"
#include "lagint/engines.hpp"

#include <cstdint>
#include <map>

namespace lagint {

struct SuiteConfig {
    int n_max = 4;
    int k_min = -6;
    int k_max = 6;
    /// (s,t) sample points for the integral relations; positive-quadrant
    /// points are required by the relations with a positivity assumption.
    std::vector<std::pair<double, double>> grid;
    std::uint64_t seed = 1;
    int random_points = 8;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int bessel_trunc = 60;
    int series_trunc = 80; // cap for the byproduct / addition-formula series
    int workers = 0;       // 0 = hardware concurrency
    bool fail_fast = false;

    static std::vector<std::pair<double, double>> default_grid();
    static SuiteConfig defaults();
};

struct RelationStats {
    long attempted = 0;
    long passed = 0;
    long failed = 0;
    double worst_abs = 0.0;
    double worst_rel = 0.0;
};

struct VerificationReport {
    std::map<RelationId, RelationStats> per_relation;
    std::vector<RelationCheck> checks;   // every check, in deterministic order
    std::vector<RelationCheck> failures; // failing instances with full params
    long attempted = 0;
    long passed = 0;
    long failed = 0;
    double worst_abs = 0.0;
    double worst_rel = 0.0;
    double duration_ms = 0.0;
};

/// Eq-(4)-style differential relation between I_{n+1,k} and I_{n,k},
/// assembled from the closed form and its analytic derivatives.
RelationCheck check_diffeq(int n, int k, double s, double t,
                           double rel_tol = 1e-10, double abs_tol = 1e-12);

/// The five integral relations tying I, I^1 and the s/t derivatives
/// together. I and I^1 values come from quadrature; derivatives from the
/// closed form. For n = 0 only the fifth relation applies.
std::vector<RelationCheck> check_integral_relations(int n, int k, double s, double t,
                                                    double rel_tol = 1e-10,
                                                    double abs_tol = 1e-12);

/// Exact coefficient-vector identities for the three Laguerre recurrences,
/// plus exact spot evaluations at seeded rational points.
std::vector<RelationCheck> check_laguerre_recurrences(int m, int k, int sample_count = 4,
                                                      std::uint64_t seed = 1);

/// Coefficient of (st)^{2(n+1)+k} in I_{n+1,k} vs (-1)^k/((n+1)!(k+n+1)!),
/// exact. The coefficient is recovered from residue_exact alone by Newton
/// divided differences along the diagonal s = t.
RelationCheck check_top_coefficient(int n, int k);

/// Real cosine-kernel integral vs the Bessel series expansion.
RelationCheck check_byproduct(int n, double s, double t, int K_trunc = 80,
                              double rel_tol = 1e-9);

/// Addition formula: complex two-sided comparison of the generating
/// identity at one (n, x, y, theta).
RelationCheck check_bateman(int n, double x, double y, double theta, int K_trunc = 80,
                            double rel_tol = 1e-9);

/// Truncated Fourier-Bessel reconstruction of e^{-ix sin theta}; the check
/// records the worst absolute deviation over a theta grid.
RelationCheck check_jacobi_anger(double x, double abs_tol = 1e-10);

/// Runs every relation over the configured grid plus seeded random points.
/// Deterministic given (cfg, seed); failures are collected, never abort.
VerificationReport run_suite(const SuiteConfig& cfg);

} // namespace lagint

#endif
