#pragma once

#include <functional>

#include "moseed/core.hpp"

namespace moseed {

struct CmaResult {
  DecisionVector best_x;      // within bounds
  double best_f = 0.0;        // best evaluated objective value
  std::size_t evals_used = 0; // always a multiple of lambda, <= budget
};

// (2,4)-CMA-ES for a scalar objective over a box. Strategy parameters follow
// Hansen's review defaults evaluated at mu = 2, lambda = 4. The search runs
// in normalized [0,1]^n coordinates, the initial mean is uniform random in
// the box and sigma0 = 0.3 of the normalized box width. Candidates are
// clamped into the box before evaluation (no penalty); non-finite objective
// values are treated as +inf and still count against the budget. No restarts;
// runs until fewer than lambda evaluations remain.
CmaResult cma_minimize(const std::function<double(const DecisionVector&)>& f,
                       const Bounds& bounds, std::size_t eval_budget,
                       Rng& rng);

}  // namespace moseed
