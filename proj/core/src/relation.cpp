#include "lagint/relation.hpp"

#include <cmath>

namespace lagint {

const char* to_string(RelationId id) {
    switch (id) {
        case RelationId::DIFFEQ4: return "DIFFEQ4";
        case RelationId::REL_FIRST: return "REL_FIRST";
        case RelationId::REL_SECOND: return "REL_SECOND";
        case RelationId::REL_THIRD: return "REL_THIRD";
        case RelationId::REL_FOURTH: return "REL_FOURTH";
        case RelationId::REL_FIFTH: return "REL_FIFTH";
        case RelationId::LAG_REC5: return "LAG_REC5";
        case RelationId::LAG_REC6: return "LAG_REC6";
        case RelationId::LAG_REC7: return "LAG_REC7";
        case RelationId::TOP_COEFF: return "TOP_COEFF";
        case RelationId::BESSEL_DELTA: return "BESSEL_DELTA";
        case RelationId::JACOBI_ANGER: return "JACOBI_ANGER";
        case RelationId::BYPRODUCT: return "BYPRODUCT";
        case RelationId::BATEMAN: return "BATEMAN";
        case RelationId::BASE_CASE: return "BASE_CASE";
        case RelationId::VANISH_BRANCH: return "VANISH_BRANCH";
    }
    return "UNKNOWN";
}

RelationCheck make_check(RelationId id,
                         std::vector<std::pair<std::string, double>> params,
                         double lhs, double rhs, double rel_tol, double abs_tol,
                         bool exact) {
    RelationCheck c;
    c.id = id;
    c.params = std::move(params);
    c.lhs = lhs;
    c.rhs = rhs;
    c.abs_err = std::abs(lhs - rhs);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    c.rel_err = (scale > 0.0) ? c.abs_err / scale : 0.0;
    c.exact = exact;
    c.pass = (c.abs_err <= abs_tol) || (c.rel_err <= rel_tol);
    return c;
}

} // namespace lagint
