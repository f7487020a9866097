#pragma once

#include "ahg/numeric.hpp"

#include <vector>

namespace ahg {

enum class LPStatus { Optimal, Infeasible, Unbounded };

enum class LPRel { LE, GE, EQ };

/// One linear constraint  a . z  (rel)  rhs  over free rational variables.
struct LPConstraint {
  QVec a;
  LPRel rel = LPRel::LE;
  Rat rhs = Rat(0);
};

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rat value = Rat(0);  // optimal objective value when status == Optimal
  QVec point;          // an optimal point when status == Optimal
};

/// Exact-rational linear program: minimize c . z subject to the given
/// constraints, z free (unbounded in sign). Two-phase simplex with Bland's
/// rule; free variables are split into differences of nonnegatives.
LPResult lp_minimize(const QVec& c, const std::vector<LPConstraint>& cons);

/// Feasibility only: lp_minimize with zero objective.
bool lp_feasible(const std::vector<LPConstraint>& cons, int nvars);

}  // namespace ahg
