#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "moseed/core.hpp"
#include "moseed/problems.hpp"

namespace moseed {

enum class SeedingScheme { NoSeed, CornersAndCentre, LinearCombinations };

SeedingScheme parse_scheme(const std::string& name);
std::string to_string(SeedingScheme s);

// Non-negative scalarization coefficients, one per objective, not all zero.
struct WeightVector {
  std::vector<double> coefficients;
};

struct SeedSet {
  SeedingScheme scheme = SeedingScheme::NoSeed;
  std::vector<Individual> seeds;        // evaluated
  std::vector<WeightVector> weights;    // parallel to seeds
  std::size_t evals_consumed = 0;
};

// sum_i w_i * f_i (optionally scaled per objective)
double scalarize(const WeightVector& w, const ObjectiveVector& f);
double scalarize(const WeightVector& w, const ObjectiveVector& f,
                 const std::vector<double>& objective_scales);

// d+1 vectors: for j < d the j-th corner (10 on coordinate j, 1 elsewhere),
// then the all-ones centre.
std::vector<WeightVector> corners_and_centre_weights(std::size_t d);

// Deterministic enumeration of integer coefficient vectors, truncated at
// count. Phase A: all 0/1 vectors by number of ones, lexicographically
// descending within each block. Phase B: value sets {0,p,q} for q = 2,3,...
// and p = 1..q-1, vectors using the largest value at least once, again
// lexicographically descending. Positive scalar multiples of earlier vectors
// and the all-zero vector are skipped.
std::vector<WeightVector> linear_combination_weights(std::size_t d,
                                                     std::size_t count = 100);

// Nominal evaluation budget a scheme spends on seeding (1e4 CAC, 1e5 LC).
std::size_t scheme_nominal_budget(SeedingScheme s);

// Per-seed CMA-ES budget split: floor(total/seeds) each, remainder on the
// last (centre) seed.
std::vector<std::size_t> seed_budget_split(std::size_t total,
                                           std::size_t seeds);

// Runs one (2,4)-CMA-ES per weight vector on the scalarized problem, then
// re-evaluates each optimizer result as a multi-objective individual (that
// final evaluation is booked against the seeding consumption too).
SeedSet generate_seeds(const ProblemInstance& p, SeedingScheme scheme,
                       Rng& rng,
                       const std::vector<double>& objective_scales = {});

// Seeds plus uniform-random fill, everything evaluated; |seeds| <= popsize.
// The caller charges the popsize - |seeds| fill evaluations to the MOEA run.
std::vector<Individual> initialize_population(const SeedSet& seeds,
                                              std::size_t popsize,
                                              const ProblemInstance& p,
                                              Rng& rng);

// Persistence: header line "scheme,problem,d,n", then one CSV line per seed
// with d weight coefficients, n decision values and d objective values.
void save_seed_set(std::ostream& os, const SeedSet& set,
                   const ProblemInstance& p);

struct LoadedSeedSet {
  SeedSet set;  // evals_consumed is not persisted and loads as 0
  std::string problem;
};
LoadedSeedSet load_seed_set(std::istream& is);

}  // namespace moseed
