#pragma once

#include "etlib/linalg.hpp"

namespace etlib {

struct LpResult {
  enum class Status { Infeasible, Unbounded, Optimal };
  Status status = Status::Infeasible;
  Rat value = 0;
  RatVec x;
};

// maximize c.x subject to A x = b, x >= 0, by two-phase primal simplex with
// Bland's rule; all pivoting exact.
LpResult lp_maximize(RatMat a, RatVec b, RatVec c);

}  // namespace etlib
