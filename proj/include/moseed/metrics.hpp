#pragma once

#include <vector>

#include "moseed/core.hpp"
#include "moseed/problems.hpp"

namespace moseed {

struct ApproximationResult {
  double alpha = 0.0;
  std::size_t witness_s = 0;  // index into S attaining the outer max
};

// Additive approximation of T with respect to the reference set S:
//   alpha(S, T) = max_{s in S} min_{t in T} max_i (t_i - s_i),
// the smallest c such that every s is weakly dominated by some t shifted
// down by c in every coordinate. 0 when T covers S exactly; negative when T
// collectively dominates S with margin. Exact scan with early exits; returns
// bitwise the same alpha as the naive triple loop.
ApproximationResult additive_approximation(
    const std::vector<ObjectiveVector>& S,
    const std::vector<ObjectiveVector>& T);

// alpha of pop against a cached reference-front sample for p. The sample is
// generated once per process per (instance, size) and reused, so every run
// is scored against the identical reference set.
double approximation_of_front(const ProblemInstance& p,
                              const std::vector<ObjectiveVector>& pop,
                              std::size_t front_sample_size, Rng& rng);

const std::vector<ObjectiveVector>& cached_front(const ProblemInstance& p,
                                                 std::size_t count, Rng& rng);

// Canonical RNG for a front cache entry: a fixed function of (instance name,
// sample size), so distinct invocations score against identical fronts.
Rng front_rng(const ProblemInstance& p, std::size_t count);

// 1e6 for the DTLZ instances (sampled fronts), 1e4 for the analytic
// 2-objective fronts.
std::size_t default_front_sample_size(const ProblemInstance& p);

// Exact hypervolume (minimization) of the region dominated by pts and bounded
// by ref. Points not componentwise <= ref are discarded, not errors.
double hypervolume(const std::vector<ObjectiveVector>& pts,
                   const ObjectiveVector& ref);

// Exclusive contribution of each point: hv(all) - hv(all minus that point).
std::vector<double> hv_contributions(const std::vector<ObjectiveVector>& pts,
                                     const ObjectiveVector& ref);

// Closed-form d=2 contributions via the sorted-neighbour rectangle geometry;
// dominated or out-of-reference points get 0.
std::vector<double> hv_contributions_2d(
    const std::vector<ObjectiveVector>& pts, const ObjectiveVector& ref);

namespace detail {
// Dimension-sweep recursion with the 2-d staircase base case disabled, so the
// recursion itself can be cross-checked against the staircase closed form.
double hypervolume_no_2d_base(const std::vector<ObjectiveVector>& pts,
                              const ObjectiveVector& ref);
}  // namespace detail

}  // namespace moseed
