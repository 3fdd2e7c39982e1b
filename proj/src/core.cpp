#include "moseed/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moseed {

Bounds::Bounds(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size())
    throw std::invalid_argument("Bounds: lower/upper size mismatch");
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (!(lower[i] < upper[i]))
      throw std::invalid_argument("Bounds: lower[i] must be < upper[i]");
}

Bounds Bounds::uniform(std::size_t n, double lo, double hi) {
  return Bounds(std::vector<double>(n, lo), std::vector<double>(n, hi));
}

Dominance dominance(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance: dimension mismatch");
  bool a_better = false, b_better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i])
      a_better = true;
    else if (b[i] < a[i])
      b_better = true;
  }
  if (a_better && b_better) return Dominance::Incomparable;
  if (a_better) return Dominance::FirstDominates;
  if (b_better) return Dominance::SecondDominates;
  return Dominance::Equal;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  return dominance(a, b) == Dominance::FirstDominates;
}

DecisionVector clamp_to_bounds(const DecisionVector& x, const Bounds& b) {
  if (x.size() != b.size())
    throw std::invalid_argument("clamp_to_bounds: dimension mismatch");
  DecisionVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = std::min(std::max(x[i], b.lower[i]), b.upper[i]);
  return out;
}

namespace {

// splitmix64; scrambles seeds so that nearby values give unrelated streams
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), gen_(mix64(seed)) {}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  // Box-Muller, cosine branch only: deterministic one-value-per-call
  double u1 = 1.0 - uniform();  // (0, 1]
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::index: n must be positive");
  return static_cast<std::size_t>(next_u64() % n);
}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(mix64(seed_ ^ mix64(stream + 1)));
}

}  // namespace moseed
