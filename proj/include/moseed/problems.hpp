#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "moseed/core.hpp"

namespace moseed {

// A benchmark instance: evaluator plus a sampler for the known Pareto front.
struct ProblemInstance {
  std::string name;
  std::size_t n = 0;  // decision variables
  std::size_t d = 0;  // objectives
  Bounds bounds;
  // pure function of x; assumes x is in bounds (use evaluate() for checking)
  std::function<ObjectiveVector(const DecisionVector&)> evaluator;
  std::function<std::vector<ObjectiveVector>(std::size_t, Rng&)> front_sampler;
};

// Bounds-checked evaluation; throws std::domain_error on out-of-bounds input
// (callers are expected to clamp first).
ObjectiveVector evaluate(const ProblemInstance& p, const DecisionVector& x);

// count points from the instance's Pareto-front sampler.
std::vector<ObjectiveVector> front_sample(const ProblemInstance& p,
                                          std::size_t count, Rng& rng);

// Registry: zdt1..zdt4, zdt6, dtlz{1..4}_d{2,4,6,8}, lz09_f1, lz09_f2.
const ProblemInstance& find_problem(const std::string& name);
std::vector<std::string> problem_names();

// One objective vector per line, comma separated, '.' decimal, LF terminated.
void write_objectives_csv(std::ostream& os,
                          const std::vector<ObjectiveVector>& points);

}  // namespace moseed
