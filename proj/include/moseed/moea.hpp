#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "moseed/core.hpp"
#include "moseed/problems.hpp"

namespace moseed {

enum class Algorithm { Nsga2, Spea2, Ibea, SmsEmoa, Age };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm a);
std::vector<std::string> algorithm_names();

struct AlgorithmConfig {
  Algorithm algorithm = Algorithm::Nsga2;
  std::size_t mu = 100;
  std::size_t lambda = 100;
  double p_crossover = 0.9;
  double eta_crossover = 20.0;
  double p_mutation = -1.0;  // < 0 means 1/n, resolved per problem
  double eta_mutation = 20.0;
  double ibea_kappa = 0.05;
  double smsemoa_ref_offset = 1.0;
};

enum class TerminationReason { Budget, Wallclock };
std::string to_string(TerminationReason r);

struct RunResult {
  std::vector<Individual> final_population;  // the algorithm's reporting set
  std::vector<Individual> archive;           // best-so-far non-dominated set
  std::size_t evals_used = 0;
  std::size_t generations = 0;
  TerminationReason termination = TerminationReason::Budget;
};

// Invoked at the metric cadence and once at termination with the current
// evaluation count, the algorithm's reporting set and the best-so-far
// archive.
using MetricHook = std::function<void(
    std::size_t evals, const std::vector<Individual>& report,
    const std::vector<Individual>& archive)>;

// Runs one MOEA until the evaluation budget cannot afford another step or the
// wall clock expires. init must hold exactly cfg.mu evaluated individuals;
// init_eval_cost is the number of evaluations already spent building it
// (the random fill), charged against eval_budget.
RunResult run_algorithm(const AlgorithmConfig& cfg, const ProblemInstance& p,
                        std::vector<Individual> init,
                        std::size_t init_eval_cost, std::size_t eval_budget,
                        std::chrono::duration<double> wallclock_limit,
                        std::size_t metric_cadence, const MetricHook& hook,
                        Rng& rng);

// ------------------------------------------------------------- shared pieces

// Deb's fast non-dominated sort; fronts of indices, best front first.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    const std::vector<ObjectiveVector>& objs);

// Crowding distance within one front; boundary points get +inf, fronts of
// size <= 2 are all +inf.
std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& objs);

// SBX with spread-factor recombination; each variable recombines with
// probability 0.5 when the pair crossover fires (probability p_c). Children
// are clamped to bounds and returned unevaluated.
std::pair<Individual, Individual> sbx_crossover(const Individual& a,
                                                const Individual& b,
                                                double p_c, double eta_c,
                                                const Bounds& bounds,
                                                Rng& rng);

// Bounded polynomial mutation, each variable with probability p_m.
Individual polynomial_mutation(const Individual& x, double p_m, double eta_m,
                               const Bounds& bounds, Rng& rng);

// Insert into a mutually non-dominated archive: dominated or duplicate
// candidates are no-ops, a dominating candidate evicts what it dominates.
// Returns true when the candidate was added.
bool archive_insert(std::vector<Individual>& archive, const Individual& cand);

namespace detail {

// SPEA2 archive truncation: repeatedly drops the member with the
// lexicographically smallest sorted-distance profile until `target` remain.
// Returns the kept indices in ascending order. Internal; exposed so the lazy
// neighbour-list implementation can be checked against a direct recompute.
std::vector<std::size_t> spea2_truncate(
    const std::vector<ObjectiveVector>& objs, std::size_t target);

// AGE environmental selection: greedily removes the pool member whose removal
// least increases alpha(archive, pool) until mu remain. Internal; exposed so
// the incremental best/second bookkeeping can be checked against a naive
// recompute.
std::vector<Individual> age_environmental(
    std::vector<Individual> pool, const std::vector<Individual>& archive,
    std::size_t mu);

}  // namespace detail

}  // namespace moseed
