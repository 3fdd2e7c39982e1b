#include "moseed/seeding.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "moseed/cmaes.hpp"

namespace moseed {

SeedingScheme parse_scheme(const std::string& name) {
  std::string low = name;
  for (char& c : low) c = static_cast<char>(std::tolower(c));
  if (low == "noseed") return SeedingScheme::NoSeed;
  if (low == "cornersandcentre") return SeedingScheme::CornersAndCentre;
  if (low == "linearcombinations") return SeedingScheme::LinearCombinations;
  throw std::invalid_argument("unknown seeding scheme: " + name);
}

std::string to_string(SeedingScheme s) {
  switch (s) {
    case SeedingScheme::NoSeed:
      return "NoSeed";
    case SeedingScheme::CornersAndCentre:
      return "CornersAndCentre";
    case SeedingScheme::LinearCombinations:
      return "LinearCombinations";
  }
  throw std::logic_error("to_string: bad scheme");
}

double scalarize(const WeightVector& w, const ObjectiveVector& f) {
  if (w.coefficients.size() != f.size())
    throw std::invalid_argument("scalarize: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += w.coefficients[i] * f[i];
  return s;
}

double scalarize(const WeightVector& w, const ObjectiveVector& f,
                 const std::vector<double>& objective_scales) {
  if (objective_scales.empty()) return scalarize(w, f);
  if (w.coefficients.size() != f.size() ||
      objective_scales.size() != f.size())
    throw std::invalid_argument("scalarize: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    s += w.coefficients[i] * objective_scales[i] * f[i];
  return s;
}

std::vector<WeightVector> corners_and_centre_weights(std::size_t d) {
  if (d < 2)
    throw std::invalid_argument(
        "corners_and_centre_weights: need at least 2 objectives");
  std::vector<WeightVector> out;
  out.reserve(d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    WeightVector w{std::vector<double>(d, 1.0)};
    w.coefficients[j] = 10.0;
    out.push_back(std::move(w));
  }
  out.push_back(WeightVector{std::vector<double>(d, 1.0)});
  return out;
}

namespace {

// gcd-normalized form used to skip positive scalar multiples
std::vector<int> normalized(const std::vector<int>& v) {
  int g = 0;
  for (int c : v) g = std::gcd(g, c);
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

}  // namespace

std::vector<WeightVector> linear_combination_weights(std::size_t d,
                                                     std::size_t count) {
  if (d < 2)
    throw std::invalid_argument(
        "linear_combination_weights: need at least 2 objectives");
  if (count == 0) return {};

  std::vector<WeightVector> out;
  std::set<std::vector<int>> seen;
  auto emit = [&](const std::vector<int>& v) {
    if (!seen.insert(normalized(v)).second) return;
    WeightVector w;
    w.coefficients.assign(v.begin(), v.end());
    out.push_back(std::move(w));
  };

  // Phase A: 0/1 vectors by number of ones, lexicographically descending
  // within each block (ones as far left as possible first).
  for (std::size_t k = 1; k <= d && out.size() < count; ++k) {
    std::vector<std::size_t> pos(k);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    while (out.size() < count) {
      std::vector<int> v(d, 0);
      for (std::size_t p : pos) v[p] = 1;
      emit(v);
      // next k-combination of {0..d-1} in lexicographic order
      std::size_t i = k;
      while (i > 0 && pos[i - 1] == d - k + i - 1) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
  }

  // Phase B: value sets {0,p,q}, q = 2,3,... and p = 1..q-1; within a set all
  // vectors over {0,p,q} using q at least once, lexicographically descending.
  for (int q = 2; out.size() < count; ++q) {
    for (int p = 1; p < q && out.size() < count; ++p) {
      const int digits[3] = {q, p, 0};  // descending digit alphabet
      std::vector<std::size_t> counter(d, 0);
      while (out.size() < count) {
        std::vector<int> v(d);
        bool uses_q = false;
        for (std::size_t i = 0; i < d; ++i) {
          v[i] = digits[counter[i]];
          if (v[i] == q) uses_q = true;
        }
        if (uses_q) emit(v);
        // odometer over the 3-letter alphabet, most significant digit first
        std::size_t i = d;
        while (i > 0 && counter[i - 1] == 2) counter[--i] = 0;
        if (i == 0) break;
        ++counter[i - 1];
      }
    }
  }
  return out;
}

std::size_t scheme_nominal_budget(SeedingScheme s) {
  switch (s) {
    case SeedingScheme::NoSeed:
      return 0;
    case SeedingScheme::CornersAndCentre:
      return 10000;
    case SeedingScheme::LinearCombinations:
      return 100000;
  }
  throw std::logic_error("scheme_nominal_budget: bad scheme");
}

std::vector<std::size_t> seed_budget_split(std::size_t total,
                                           std::size_t seeds) {
  if (seeds == 0)
    throw std::invalid_argument("seed_budget_split: no seeds");
  std::vector<std::size_t> split(seeds, total / seeds);
  split.back() += total % seeds;
  return split;
}

SeedSet generate_seeds(const ProblemInstance& p, SeedingScheme scheme,
                       Rng& rng,
                       const std::vector<double>& objective_scales) {
  SeedSet set;
  set.scheme = scheme;
  if (scheme == SeedingScheme::NoSeed) return set;

  set.weights = scheme == SeedingScheme::CornersAndCentre
                    ? corners_and_centre_weights(p.d)
                    : linear_combination_weights(p.d, 100);
  const auto budgets =
      seed_budget_split(scheme_nominal_budget(scheme), set.weights.size());

  set.seeds.reserve(set.weights.size());
  for (std::size_t i = 0; i < set.weights.size(); ++i) {
    const WeightVector& w = set.weights[i];
    auto scalar_objective = [&](const DecisionVector& x) {
      return scalarize(w, p.evaluator(x), objective_scales);
    };
    CmaResult r = cma_minimize(scalar_objective, p.bounds, budgets[i], rng);
    set.evals_consumed += r.evals_used;
    Individual seed;
    seed.decision = std::move(r.best_x);
    seed.objectives = p.evaluator(seed.decision);
    ++set.evals_consumed;  // the final multi-objective evaluation
    set.seeds.push_back(std::move(seed));
  }
  return set;
}

std::vector<Individual> initialize_population(const SeedSet& seeds,
                                              std::size_t popsize,
                                              const ProblemInstance& p,
                                              Rng& rng) {
  if (seeds.seeds.size() > popsize)
    throw std::invalid_argument(
        "initialize_population: more seeds than population slots");
  std::vector<Individual> pop = seeds.seeds;
  pop.reserve(popsize);
  while (pop.size() < popsize) {
    Individual ind;
    ind.decision.resize(p.n);
    for (std::size_t i = 0; i < p.n; ++i)
      ind.decision[i] = rng.uniform(p.bounds.lower[i], p.bounds.upper[i]);
    ind.objectives = p.evaluator(ind.decision);
    pop.push_back(std::move(ind));
  }
  return pop;
}

namespace {

void write_csv_row(std::ostream& os, const std::vector<double>& values) {
  char buf[64];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
    if (i) os << ',';
    os << buf;
  }
}

}  // namespace

void save_seed_set(std::ostream& os, const SeedSet& set,
                   const ProblemInstance& p) {
  os << to_string(set.scheme) << ',' << p.name << ',' << p.d << ',' << p.n
     << '\n';
  for (std::size_t i = 0; i < set.seeds.size(); ++i) {
    std::vector<double> row = set.weights[i].coefficients;
    row.insert(row.end(), set.seeds[i].decision.begin(),
               set.seeds[i].decision.end());
    row.insert(row.end(), set.seeds[i].objectives.begin(),
               set.seeds[i].objectives.end());
    write_csv_row(os, row);
    os << '\n';
  }
}

LoadedSeedSet load_seed_set(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("load_seed_set: empty input");
  std::istringstream header(line);
  std::string scheme_name, problem, field;
  if (!std::getline(header, scheme_name, ',') ||
      !std::getline(header, problem, ','))
    throw std::runtime_error("load_seed_set: malformed header");
  std::size_t d = 0, n = 0;
  if (!std::getline(header, field, ','))
    throw std::runtime_error("load_seed_set: malformed header");
  d = std::stoul(field);
  if (!std::getline(header, field, ','))
    throw std::runtime_error("load_seed_set: malformed header");
  n = std::stoul(field);

  LoadedSeedSet loaded;
  loaded.problem = problem;
  loaded.set.scheme = parse_scheme(scheme_name);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<double> values;
    while (std::getline(row, field, ',')) values.push_back(std::stod(field));
    if (values.size() != d + n + d)
      throw std::runtime_error("load_seed_set: bad row width");
    WeightVector w;
    w.coefficients.assign(values.begin(), values.begin() + d);
    Individual ind;
    ind.decision.assign(values.begin() + d, values.begin() + d + n);
    ind.objectives.assign(values.begin() + d + n, values.end());
    loaded.set.weights.push_back(std::move(w));
    loaded.set.seeds.push_back(std::move(ind));
  }
  return loaded;
}

}  // namespace moseed
