#pragma once

#include <optional>

#include "parv/polyhedron.hpp"

namespace parv {

/// Exact rational linear programming:
///
///   maximize <objective, x>  subject to  <a_i, x> <= b_i  (x free)
///
/// solved by two-phase tableau simplex with Bland's rule, which terminates
/// on every rational input. An optimal answer carries the dual multipliers
/// y >= 0 with A^T y = objective and <b, y> = value, so optimality is a
/// checkable certificate rather than a trusted return code.
struct LpOptimum {
  Vec point;
  Scalar value;
  Vec dual;  // one multiplier per halfspace
};

struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status;
  std::optional<LpOptimum> optimum;  // set when optimal
  Vec ray;                           // improving direction when unbounded
};

LpResult solve_lp(const HPolyhedron& constraints, const Vec& objective);

/// Convenience feasibility probe (objective 0).
std::optional<Vec> feasible_point(const HPolyhedron& constraints);

}  // namespace parv
