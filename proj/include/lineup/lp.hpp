#pragma once

#include "lineup/linalg.hpp"
#include "lineup/rational.hpp"

#include <vector>

namespace lineup {

enum class LpStatus { optimal, unbounded, infeasible };

/// maximize <objective, x>  subject to  equalities * x = rhs,
/// x_j >= 0 wherever nonnegative[j] is set (other variables are free).
struct LpProblem {
    Vector objective;
    Matrix equalities;
    Vector rhs;
    std::vector<bool> nonnegative;
};

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    /// Optimal value; meaningful only for LpStatus::optimal.
    Rational value;
    /// A feasible point (optimal when status is optimal). Empty if infeasible.
    Vector witness;
};

/// Exact two-phase simplex with Bland's rule.
LpResult lp_solve(const LpProblem& problem);

const char* to_string(LpStatus status);

}  // namespace lineup
