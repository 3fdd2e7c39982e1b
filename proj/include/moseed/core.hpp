#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace moseed {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

// Box constraints, lower[i] < upper[i] for every variable.
struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  Bounds() = default;
  Bounds(std::vector<double> lo, std::vector<double> hi);
  static Bounds uniform(std::size_t n, double lo, double hi);

  std::size_t size() const { return lower.size(); }
  double width(std::size_t i) const { return upper[i] - lower[i]; }
};

// A candidate solution; objectives stay empty until evaluated.
struct Individual {
  DecisionVector decision;
  ObjectiveVector objectives;

  bool evaluated() const { return !objectives.empty(); }
};

// Pareto dominance for minimization: a dominates b iff a <= b componentwise
// and a != b.
enum class Dominance { FirstDominates, SecondDominates, Equal, Incomparable };

Dominance dominance(const ObjectiveVector& a, const ObjectiveVector& b);

// true iff a strictly dominates b
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

DecisionVector clamp_to_bounds(const DecisionVector& x, const Bounds& b);

// Deterministic random stream. Two handles built from the same seed yield
// identical sequences; split() derives an independent child stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64() { return gen_(); }
  double uniform();                        // [0, 1)
  double uniform(double lo, double hi);    // [lo, hi)
  double normal();                         // standard normal
  std::size_t index(std::size_t n);        // uniform in [0, n), n > 0
  bool coin() { return (next_u64() & 1u) != 0; }

  Rng split(std::uint64_t stream) const;
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace moseed
