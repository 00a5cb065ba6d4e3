#ifndef LAGINT_RELATION_HPP
#define LAGINT_RELATION_HPP

#include <string>
#include <utility>
#include <vector>

namespace lagint {

enum class RelationId {
    DIFFEQ4,
    REL_FIRST,
    REL_SECOND,
    REL_THIRD,
    REL_FOURTH,
    REL_FIFTH,
    LAG_REC5,
    LAG_REC6,
    LAG_REC7,
    TOP_COEFF,
    BESSEL_DELTA,
    JACOBI_ANGER,
    BYPRODUCT,
    BATEMAN,
    BASE_CASE,
    VANISH_BRANCH,
};

inline constexpr RelationId kAllRelations[] = {
    RelationId::DIFFEQ4,     RelationId::REL_FIRST,  RelationId::REL_SECOND,
    RelationId::REL_THIRD,   RelationId::REL_FOURTH, RelationId::REL_FIFTH,
    RelationId::LAG_REC5,    RelationId::LAG_REC6,   RelationId::LAG_REC7,
    RelationId::TOP_COEFF,   RelationId::BESSEL_DELTA, RelationId::JACOBI_ANGER,
    RelationId::BYPRODUCT,   RelationId::BATEMAN,    RelationId::BASE_CASE,
    RelationId::VANISH_BRANCH,
};

const char* to_string(RelationId id);

/// One verified identity instance: both sides, the error, and the verdict.
/// For exact (rational-arithmetic) checks abs_err is exactly 0 on pass.
struct RelationCheck {
    RelationId id;
    std::vector<std::pair<std::string, double>> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool exact = false;
    bool inconclusive = false; // series truncation did not converge
    bool pass = false;
};

/// Builds a check record; pass iff abs_err <= abs_tol or rel_err <= rel_tol.
RelationCheck make_check(RelationId id,
                         std::vector<std::pair<std::string, double>> params,
                         double lhs, double rhs, double rel_tol, double abs_tol,
                         bool exact = false);

} // namespace lagint

#endif
