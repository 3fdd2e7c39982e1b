#include "moseed/moea.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "moseed/metrics.hpp"

namespace moseed {

Algorithm parse_algorithm(const std::string& name) {
  std::string low = name;
  for (char& c : low) c = static_cast<char>(std::tolower(c));
  if (low == "nsga2") return Algorithm::Nsga2;
  if (low == "spea2") return Algorithm::Spea2;
  if (low == "ibea") return Algorithm::Ibea;
  if (low == "smsemoa") return Algorithm::SmsEmoa;
  if (low == "age") return Algorithm::Age;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Nsga2:
      return "nsga2";
    case Algorithm::Spea2:
      return "spea2";
    case Algorithm::Ibea:
      return "ibea";
    case Algorithm::SmsEmoa:
      return "smsemoa";
    case Algorithm::Age:
      return "age";
  }
  throw std::logic_error("to_string: bad algorithm");
}

std::vector<std::string> algorithm_names() {
  return {"nsga2", "spea2", "ibea", "smsemoa", "age"};
}

std::string to_string(TerminationReason r) {
  return r == TerminationReason::Budget ? "budget" : "wallclock";
}

// --------------------------------------------------------------- operators

std::pair<Individual, Individual> sbx_crossover(const Individual& a,
                                                const Individual& b,
                                                double p_c, double eta_c,
                                                const Bounds& bounds,
                                                Rng& rng) {
  if (a.decision.size() != b.decision.size() ||
      a.decision.size() != bounds.size())
    throw std::invalid_argument("sbx_crossover: dimension mismatch");
  Individual c1{a.decision, {}};
  Individual c2{b.decision, {}};
  if (rng.uniform() > p_c) return {std::move(c1), std::move(c2)};

  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (rng.uniform() > 0.5) continue;
    const double u = rng.uniform();
    const double exponent = 1.0 / (eta_c + 1.0);
    const double beta = u <= 0.5
                            ? std::pow(2.0 * u, exponent)
                            : std::pow(1.0 / (2.0 * (1.0 - u)), exponent);
    const double y1 = a.decision[i];
    const double y2 = b.decision[i];
    const double v1 = 0.5 * ((1.0 + beta) * y1 + (1.0 - beta) * y2);
    const double v2 = 0.5 * ((1.0 - beta) * y1 + (1.0 + beta) * y2);
    c1.decision[i] = std::min(std::max(v1, bounds.lower[i]), bounds.upper[i]);
    c2.decision[i] = std::min(std::max(v2, bounds.lower[i]), bounds.upper[i]);
  }
  return {std::move(c1), std::move(c2)};
}

Individual polynomial_mutation(const Individual& x, double p_m, double eta_m,
                               const Bounds& bounds, Rng& rng) {
  if (x.decision.size() != bounds.size())
    throw std::invalid_argument("polynomial_mutation: dimension mismatch");
  Individual out{x.decision, {}};
  const double exponent = 1.0 / (eta_m + 1.0);
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (rng.uniform() >= p_m) continue;
    const double lo = bounds.lower[i], hi = bounds.upper[i];
    const double y = out.decision[i];
    const double u = rng.uniform();
    double dq;
    if (u < 0.5) {
      const double xy = 1.0 - (y - lo) / (hi - lo);
      const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta_m + 1.0);
      dq = std::pow(val, exponent) - 1.0;
    } else {
      const double xy = 1.0 - (hi - y) / (hi - lo);
      const double val =
          2.0 * (1.0 - u) + (2.0 * u - 1.0) * std::pow(xy, eta_m + 1.0);
      dq = 1.0 - std::pow(val, exponent);
    }
    out.decision[i] =
        std::min(std::max(y + dq * (hi - lo), lo), hi);
  }
  return out;
}

// ------------------------------------------------------- sorting & crowding

std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    const std::vector<ObjectiveVector>& objs) {
  const std::size_t n = objs.size();
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<std::size_t> counter(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      switch (dominance(objs[i], objs[j])) {
        case Dominance::FirstDominates:
          dominated[i].push_back(j);
          ++counter[j];
          break;
        case Dominance::SecondDominates:
          dominated[j].push_back(i);
          ++counter[i];
          break;
        default:
          break;
      }
    }
  }
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i)
    if (counter[i] == 0) current.push_back(i);
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t i : current)
      for (std::size_t j : dominated[i])
        if (--counter[j] == 0) next.push_back(j);
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(
    const std::vector<ObjectiveVector>& objs) {
  const std::size_t m = objs.size();
  const double inf = std::numeric_limits<double>::infinity();
  if (m == 0) return {};
  std::vector<double> dist(m, 0.0);
  if (m <= 2) {
    std::fill(dist.begin(), dist.end(), inf);
    return dist;
  }
  const std::size_t d = objs[0].size();
  std::vector<std::size_t> idx(m);
  for (std::size_t k = 0; k < d; ++k) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&objs, k](std::size_t a, std::size_t b) {
                       return objs[a][k] < objs[b][k];
                     });
    dist[idx[0]] = inf;
    dist[idx[m - 1]] = inf;
    const double range = objs[idx[m - 1]][k] - objs[idx[0]][k];
    if (range == 0.0) continue;
    for (std::size_t j = 1; j + 1 < m; ++j)
      dist[idx[j]] += (objs[idx[j + 1]][k] - objs[idx[j - 1]][k]) / range;
  }
  return dist;
}

bool archive_insert(std::vector<Individual>& archive, const Individual& cand) {
  for (const Individual& member : archive) {
    const Dominance rel = dominance(member.objectives, cand.objectives);
    if (rel == Dominance::FirstDominates || rel == Dominance::Equal)
      return false;
  }
  archive.erase(std::remove_if(archive.begin(), archive.end(),
                               [&cand](const Individual& member) {
                                 return dominates(cand.objectives,
                                                  member.objectives);
                               }),
                archive.end());
  archive.push_back(cand);
  return true;
}

// -------------------------------------------------- environmental kernels

namespace detail {

// iterative removal of the member with the lexicographically smallest sorted
// distance profile, with lazy deletion in the per-member neighbour lists
std::vector<std::size_t> spea2_truncate(
    const std::vector<ObjectiveVector>& objs, std::size_t target) {
  const std::size_t m = objs.size();
  std::vector<std::vector<std::pair<double, std::size_t>>> lists(m);
  for (std::size_t i = 0; i < m; ++i) {
    lists[i].reserve(m - 1);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      double s = 0.0;
      for (std::size_t c = 0; c < objs[i].size(); ++c) {
        const double dd = objs[i][c] - objs[j][c];
        s += dd * dd;
      }
      lists[i].emplace_back(s, j);
    }
    std::sort(lists[i].begin(), lists[i].end());
  }
  std::vector<bool> alive(m, true);
  std::size_t alive_count = m;

  // true when i's distance profile is lexicographically smaller than j's
  auto more_crowded = [&](std::size_t i, std::size_t j) {
    std::size_t pi = 0, pj = 0;
    while (true) {
      while (pi < lists[i].size() && !alive[lists[i][pi].second]) ++pi;
      while (pj < lists[j].size() && !alive[lists[j][pj].second]) ++pj;
      if (pi == lists[i].size() || pj == lists[j].size()) return false;
      if (lists[i][pi].first != lists[j][pj].first)
        return lists[i][pi].first < lists[j][pj].first;
      ++pi;
      ++pj;
    }
  };

  while (alive_count > target) {
    std::size_t victim = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (!alive[i]) continue;
      if (victim == m || more_crowded(i, victim)) victim = i;
    }
    alive[victim] = false;
    --alive_count;
  }
  std::vector<std::size_t> kept;
  kept.reserve(target);
  for (std::size_t i = 0; i < m; ++i)
    if (alive[i]) kept.push_back(i);
  return kept;
}

// Greedily removes pool members whose removal least increases
// alpha(archive, pool).
std::vector<Individual> age_environmental(
    std::vector<Individual> pool, const std::vector<Individual>& archive,
    std::size_t mu) {
  const std::size_t m = pool.size();
  const std::size_t na = archive.size();
  const std::size_t d = archive.empty() ? 0 : archive[0].objectives.size();

  // per archive point: value against each pool member, plus best/second best
  std::vector<std::vector<double>> val(na, std::vector<double>(m));
  std::vector<std::size_t> best(na), second(na);
  std::vector<bool> alive(m, true);

  auto rescan_row = [&](std::size_t a) {
    std::size_t b1 = m, b2 = m;
    for (std::size_t p = 0; p < m; ++p) {
      if (!alive[p]) continue;
      if (b1 == m || val[a][p] < val[a][b1]) {
        b2 = b1;
        b1 = p;
      } else if (b2 == m || val[a][p] < val[a][b2]) {
        b2 = p;
      }
    }
    best[a] = b1;
    second[a] = b2;
  };

  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t p = 0; p < m; ++p) {
      double v = -std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < d; ++c)
        v = std::max(v, pool[p].objectives[c] - archive[a].objectives[c]);
      val[a][p] = v;
    }
    rescan_row(a);
  }

  std::size_t alive_count = m;
  std::vector<double> fallback(m);
  while (alive_count > mu) {
    // contribution of each pool member: alpha if that member were removed
    std::fill(fallback.begin(), fallback.end(),
              -std::numeric_limits<double>::infinity());
    double top1 = -std::numeric_limits<double>::infinity();
    double top1_alt = -std::numeric_limits<double>::infinity();
    std::size_t top1_owner = m;
    for (std::size_t a = 0; a < na; ++a) {
      const double b = val[a][best[a]];
      if (b > top1) {
        if (best[a] != top1_owner) top1_alt = top1;
        top1 = b;
        top1_owner = best[a];
      } else if (best[a] != top1_owner && b > top1_alt) {
        top1_alt = b;
      }
      if (second[a] != m)
        fallback[best[a]] = std::max(fallback[best[a]], val[a][second[a]]);
    }
    std::size_t victim = m;
    double victim_alpha = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < m; ++p) {
      if (!alive[p]) continue;
      const double base = p == top1_owner ? top1_alt : top1;
      const double alpha_without = std::max(base, fallback[p]);
      if (alpha_without < victim_alpha) {
        victim_alpha = alpha_without;
        victim = p;
      }
    }
    alive[victim] = false;
    --alive_count;
    for (std::size_t a = 0; a < na; ++a)
      if (best[a] == victim || second[a] == victim) rescan_row(a);
  }

  std::vector<Individual> next;
  next.reserve(mu);
  for (std::size_t p = 0; p < m; ++p)
    if (alive[p]) next.push_back(std::move(pool[p]));
  return next;
}

}  // namespace detail

// ------------------------------------------------------------- run plumbing

namespace {

using Clock = std::chrono::steady_clock;

std::vector<ObjectiveVector> objectives_of(const std::vector<Individual>& v) {
  std::vector<ObjectiveVector> objs;
  objs.reserve(v.size());
  for (const auto& ind : v) objs.push_back(ind.objectives);
  return objs;
}

struct RunContext {
  const ProblemInstance& problem;
  std::size_t budget;
  Clock::time_point start;
  std::chrono::duration<double> wallclock;
  std::size_t cadence;
  const MetricHook* hook;
  Rng& rng;

  std::vector<Individual> archive;
  std::size_t evals = 0;
  std::size_t next_mark = 0;
  std::size_t last_sample = std::numeric_limits<std::size_t>::max();

  void evaluate(Individual& ind) {
    ind.objectives = problem.evaluator(ind.decision);
    ++evals;
    archive_insert(archive, ind);
  }

  bool wall_expired() const {
    return Clock::now() - start >= wallclock;
  }

  bool affordable(std::size_t k) const { return evals + k <= budget; }

  void maybe_sample(const std::vector<Individual>& report) {
    if (!hook || !*hook || evals < next_mark) return;
    (*hook)(evals, report, archive);
    last_sample = evals;
    next_mark = (evals / cadence + 1) * cadence;
  }

  void final_sample(const std::vector<Individual>& report) {
    if (!hook || !*hook || last_sample == evals) return;
    (*hook)(evals, report, archive);
    last_sample = evals;
  }
};

int compare_dominance(const ObjectiveVector& a, const ObjectiveVector& b) {
  switch (dominance(a, b)) {
    case Dominance::FirstDominates:
      return -1;
    case Dominance::SecondDominates:
      return 1;
    default:
      return 0;
  }
}

template <typename Cmp>
std::size_t binary_tournament(std::size_t n, Rng& rng, const Cmp& cmp) {
  const std::size_t a = rng.index(n);
  const std::size_t b = rng.index(n);
  const int c = cmp(a, b);
  if (c < 0) return a;
  if (c > 0) return b;
  return rng.coin() ? a : b;
}

// exactly lambda evaluated children
template <typename PickParent>
std::vector<Individual> make_offspring(RunContext& ctx,
                                       const AlgorithmConfig& cfg, double p_m,
                                       const PickParent& pick) {
  std::vector<Individual> out;
  out.reserve(cfg.lambda);
  while (out.size() < cfg.lambda) {
    auto [c1, c2] = sbx_crossover(pick(), pick(), cfg.p_crossover,
                                  cfg.eta_crossover, ctx.problem.bounds,
                                  ctx.rng);
    Individual m1 = polynomial_mutation(c1, p_m, cfg.eta_mutation,
                                        ctx.problem.bounds, ctx.rng);
    ctx.evaluate(m1);
    out.push_back(std::move(m1));
    if (out.size() < cfg.lambda) {
      Individual m2 = polynomial_mutation(c2, p_m, cfg.eta_mutation,
                                          ctx.problem.bounds, ctx.rng);
      ctx.evaluate(m2);
      out.push_back(std::move(m2));
    }
  }
  return out;
}

struct RankCrowd {
  std::vector<std::size_t> rank;
  std::vector<double> crowd;
};

RankCrowd rank_and_crowd(const std::vector<ObjectiveVector>& objs) {
  RankCrowd rc;
  rc.rank.assign(objs.size(), 0);
  rc.crowd.assign(objs.size(), 0.0);
  const auto fronts = fast_nondominated_sort(objs);
  for (std::size_t f = 0; f < fronts.size(); ++f) {
    std::vector<ObjectiveVector> front_objs;
    front_objs.reserve(fronts[f].size());
    for (std::size_t i : fronts[f]) front_objs.push_back(objs[i]);
    const auto cd = crowding_distance(front_objs);
    for (std::size_t j = 0; j < fronts[f].size(); ++j) {
      rc.rank[fronts[f][j]] = f;
      rc.crowd[fronts[f][j]] = cd[j];
    }
  }
  return rc;
}

std::vector<Individual> nsga2_select(std::vector<Individual> pool,
                                     std::size_t mu) {
  const auto objs = objectives_of(pool);
  const auto fronts = fast_nondominated_sort(objs);
  std::vector<Individual> next;
  next.reserve(mu);
  for (const auto& front : fronts) {
    if (next.size() + front.size() <= mu) {
      for (std::size_t i : front) next.push_back(std::move(pool[i]));
      if (next.size() == mu) break;
      continue;
    }
    std::vector<ObjectiveVector> front_objs;
    front_objs.reserve(front.size());
    for (std::size_t i : front) front_objs.push_back(objs[i]);
    const auto cd = crowding_distance(front_objs);
    std::vector<std::size_t> order(front.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&cd](std::size_t a, std::size_t b) {
                       return cd[a] > cd[b];
                     });
    for (std::size_t j = 0; next.size() < mu; ++j)
      next.push_back(std::move(pool[front[order[j]]]));
    break;
  }
  return next;
}

// ------------------------------------------------------------------ NSGA-II

std::vector<Individual> run_nsga2(RunContext& ctx, const AlgorithmConfig& cfg,
                                  double p_m, std::vector<Individual> pop,
                                  RunResult& result) {
  while (true) {
    ctx.maybe_sample(pop);
    if (ctx.wall_expired()) {
      result.termination = TerminationReason::Wallclock;
      break;
    }
    if (!ctx.affordable(cfg.lambda)) {
      result.termination = TerminationReason::Budget;
      break;
    }
    const auto rc = rank_and_crowd(objectives_of(pop));
    auto cmp = [&rc](std::size_t a, std::size_t b) {
      if (rc.rank[a] != rc.rank[b]) return rc.rank[a] < rc.rank[b] ? -1 : 1;
      if (rc.crowd[a] != rc.crowd[b]) return rc.crowd[a] > rc.crowd[b] ? -1 : 1;
      return 0;
    };
    auto pick = [&]() -> const Individual& {
      return pop[binary_tournament(pop.size(), ctx.rng, cmp)];
    };
    auto offspring = make_offspring(ctx, cfg, p_m, pick);
    for (auto& child : offspring) pop.push_back(std::move(child));
    pop = nsga2_select(std::move(pop), cfg.mu);
    ++result.generations;
  }
  return pop;
}

// -------------------------------------------------------------------- SPEA2

struct Spea2Fitness {
  std::vector<double> fitness;
  std::vector<bool> nondominated;
};

Spea2Fitness spea2_fitness(const std::vector<ObjectiveVector>& objs) {
  const std::size_t n = objs.size();
  std::vector<std::size_t> strength(n, 0);
  std::vector<std::vector<std::size_t>> dominators(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      switch (dominance(objs[i], objs[j])) {
        case Dominance::FirstDominates:
          ++strength[i];
          dominators[j].push_back(i);
          break;
        case Dominance::SecondDominates:
          ++strength[j];
          dominators[i].push_back(j);
          break;
        default:
          break;
      }
    }
  }
  Spea2Fitness out;
  out.fitness.assign(n, 0.0);
  out.nondominated.assign(n, false);
  std::size_t k = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  if (k >= n) k = n > 1 ? n - 1 : 1;
  if (k == 0) k = 1;
  std::vector<double> dists;
  dists.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double raw = 0.0;
    for (std::size_t j : dominators[i])
      raw += static_cast<double>(strength[j]);
    out.nondominated[i] = dominators[i].empty();
    dists.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double s = 0.0;
      for (std::size_t c = 0; c < objs[i].size(); ++c) {
        const double dd = objs[i][c] - objs[j][c];
        s += dd * dd;
      }
      dists.push_back(s);
    }
    std::nth_element(dists.begin(), dists.begin() + (k - 1), dists.end());
    const double sigma = std::sqrt(dists[k - 1]);
    out.fitness[i] = raw + 1.0 / (sigma + 2.0);
  }
  return out;
}

std::vector<std::size_t> spea2_environmental(
    const std::vector<ObjectiveVector>& pool_objs, const Spea2Fitness& fit,
    std::size_t mu) {
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < pool_objs.size(); ++i)
    if (fit.nondominated[i]) chosen.push_back(i);
  if (chosen.size() > mu) {
    std::vector<ObjectiveVector> objs;
    objs.reserve(chosen.size());
    for (std::size_t i : chosen) objs.push_back(pool_objs[i]);
    const auto kept = detail::spea2_truncate(objs, mu);
    std::vector<std::size_t> reduced;
    reduced.reserve(mu);
    for (std::size_t i : kept) reduced.push_back(chosen[i]);
    chosen = std::move(reduced);
  } else if (chosen.size() < mu) {
    std::vector<std::size_t> dominated;
    for (std::size_t i = 0; i < pool_objs.size(); ++i)
      if (!fit.nondominated[i]) dominated.push_back(i);
    std::stable_sort(dominated.begin(), dominated.end(),
                     [&fit](std::size_t a, std::size_t b) {
                       return fit.fitness[a] < fit.fitness[b];
                     });
    for (std::size_t i = 0; chosen.size() < mu && i < dominated.size(); ++i)
      chosen.push_back(dominated[i]);
  }
  return chosen;
}

std::vector<Individual> run_spea2(RunContext& ctx, const AlgorithmConfig& cfg,
                                  double p_m, std::vector<Individual> pop,
                                  RunResult& result) {
  std::vector<Individual> archive;
  while (true) {
    std::vector<Individual> pool = std::move(pop);
    pool.insert(pool.end(), std::make_move_iterator(archive.begin()),
                std::make_move_iterator(archive.end()));
    const auto pool_objs = objectives_of(pool);
    const auto fit = spea2_fitness(pool_objs);
    const auto chosen = spea2_environmental(pool_objs, fit, cfg.mu);
    std::vector<double> arch_fitness;
    arch_fitness.reserve(chosen.size());
    archive.clear();
    archive.reserve(chosen.size());
    for (std::size_t i : chosen) {
      arch_fitness.push_back(fit.fitness[i]);
      archive.push_back(std::move(pool[i]));
    }

    ctx.maybe_sample(archive);
    if (ctx.wall_expired()) {
      result.termination = TerminationReason::Wallclock;
      break;
    }
    if (!ctx.affordable(cfg.lambda)) {
      result.termination = TerminationReason::Budget;
      break;
    }
    // mating pool is the archive; binary tournament on fitness (lower wins)
    auto cmp = [&arch_fitness](std::size_t a, std::size_t b) {
      if (arch_fitness[a] != arch_fitness[b])
        return arch_fitness[a] < arch_fitness[b] ? -1 : 1;
      return 0;
    };
    auto pick = [&]() -> const Individual& {
      return archive[binary_tournament(archive.size(), ctx.rng, cmp)];
    };
    pop = make_offspring(ctx, cfg, p_m, pick);
    ++result.generations;
  }
  return archive;
}

// --------------------------------------------------------------------- IBEA

struct IbeaState {
  std::vector<std::vector<double>> indicator;  // I(x, y)
  std::vector<double> fitness;
  double scale = 1.0;  // c * kappa
};

IbeaState ibea_fitness(const std::vector<ObjectiveVector>& objs,
                       double kappa) {
  const std::size_t n = objs.size();
  const std::size_t d = objs.empty() ? 0 : objs[0].size();
  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
  for (const auto& f : objs)
    for (std::size_t c = 0; c < d; ++c) {
      lo[c] = std::min(lo[c], f[c]);
      hi[c] = std::max(hi[c], f[c]);
    }
  std::vector<ObjectiveVector> norm(n, ObjectiveVector(d, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c) {
      const double range = hi[c] - lo[c];
      norm[i][c] = range > 0.0 ? (objs[i][c] - lo[c]) / range : 0.0;
    }

  IbeaState st;
  st.indicator.assign(n, std::vector<double>(n, 0.0));
  double cmax = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double eps = -std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < d; ++c)
        eps = std::max(eps, norm[i][c] - norm[j][c]);
      st.indicator[i][j] = eps;
      cmax = std::max(cmax, std::fabs(eps));
    }
  st.scale = (cmax > 0.0 ? cmax : 1.0) * kappa;
  st.fitness.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double f = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      f -= std::exp(-st.indicator[j][i] / st.scale);
    }
    st.fitness[i] = f;
  }
  return st;
}

std::vector<Individual> ibea_environmental(std::vector<Individual> pool,
                                           double kappa, std::size_t mu) {
  auto st = ibea_fitness(objectives_of(pool), kappa);
  std::vector<bool> alive(pool.size(), true);
  std::size_t alive_count = pool.size();
  while (alive_count > mu) {
    std::size_t worst = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!alive[i]) continue;
      if (worst == pool.size() || st.fitness[i] < st.fitness[worst]) worst = i;
    }
    alive[worst] = false;
    --alive_count;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!alive[i]) continue;
      st.fitness[i] += std::exp(-st.indicator[worst][i] / st.scale);
    }
  }
  std::vector<Individual> next;
  next.reserve(mu);
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (alive[i]) next.push_back(std::move(pool[i]));
  return next;
}

std::vector<Individual> run_ibea(RunContext& ctx, const AlgorithmConfig& cfg,
                                 double p_m, std::vector<Individual> pop,
                                 RunResult& result) {
  while (true) {
    ctx.maybe_sample(pop);
    if (ctx.wall_expired()) {
      result.termination = TerminationReason::Wallclock;
      break;
    }
    if (!ctx.affordable(cfg.lambda)) {
      result.termination = TerminationReason::Budget;
      break;
    }
    const auto st = ibea_fitness(objectives_of(pop), cfg.ibea_kappa);
    auto cmp = [&st](std::size_t a, std::size_t b) {
      if (st.fitness[a] != st.fitness[b])
        return st.fitness[a] > st.fitness[b] ? -1 : 1;  // larger is better
      return 0;
    };
    auto pick = [&]() -> const Individual& {
      return pop[binary_tournament(pop.size(), ctx.rng, cmp)];
    };
    auto offspring = make_offspring(ctx, cfg, p_m, pick);
    for (auto& child : offspring) pop.push_back(std::move(child));
    pop = ibea_environmental(std::move(pop), cfg.ibea_kappa, cfg.mu);
    ++result.generations;
  }
  return pop;
}

// ----------------------------------------------------------------- SMS-EMOA

std::vector<Individual> run_smsemoa(RunContext& ctx,
                                    const AlgorithmConfig& cfg, double p_m,
                                    std::vector<Individual> pop,
                                    RunResult& result) {
  while (true) {
    ctx.maybe_sample(pop);
    if (ctx.wall_expired()) {
      result.termination = TerminationReason::Wallclock;
      break;
    }
    if (!ctx.affordable(1)) {
      result.termination = TerminationReason::Budget;
      break;
    }
    const auto objs = objectives_of(pop);
    auto cmp = [&objs](std::size_t a, std::size_t b) {
      return compare_dominance(objs[a], objs[b]);
    };
    const Individual& p1 = pop[binary_tournament(pop.size(), ctx.rng, cmp)];
    const Individual& p2 = pop[binary_tournament(pop.size(), ctx.rng, cmp)];
    auto [c1, c2] = sbx_crossover(p1, p2, cfg.p_crossover, cfg.eta_crossover,
                                  ctx.problem.bounds, ctx.rng);
    Individual child = polynomial_mutation(c1, p_m, cfg.eta_mutation,
                                           ctx.problem.bounds, ctx.rng);
    ctx.evaluate(child);
    pop.push_back(std::move(child));

    const auto all_objs = objectives_of(pop);
    const auto fronts = fast_nondominated_sort(all_objs);
    const auto& worst_front = fronts.back();
    std::vector<ObjectiveVector> worst_objs;
    worst_objs.reserve(worst_front.size());
    for (std::size_t i : worst_front) worst_objs.push_back(all_objs[i]);

    ObjectiveVector ref(ctx.problem.d, 0.0);
    for (std::size_t c = 0; c < ctx.problem.d; ++c) {
      double worst = -std::numeric_limits<double>::infinity();
      for (const auto& f : worst_objs) worst = std::max(worst, f[c]);
      ref[c] = worst + cfg.smsemoa_ref_offset;
    }
    const auto contrib = ctx.problem.d == 2
                             ? hv_contributions_2d(worst_objs, ref)
                             : hv_contributions(worst_objs, ref);
    std::size_t victim = 0;
    for (std::size_t i = 1; i < contrib.size(); ++i)
      if (contrib[i] < contrib[victim]) victim = i;
    pop.erase(pop.begin() +
              static_cast<std::ptrdiff_t>(worst_front[victim]));
    ++result.generations;
  }
  return pop;
}

// ---------------------------------------------------------------------- AGE

std::vector<Individual> run_age(RunContext& ctx, const AlgorithmConfig& cfg,
                                double p_m, std::vector<Individual> pop,
                                RunResult& result) {
  while (true) {
    ctx.maybe_sample(pop);
    if (ctx.wall_expired()) {
      result.termination = TerminationReason::Wallclock;
      break;
    }
    if (!ctx.affordable(cfg.lambda)) {
      result.termination = TerminationReason::Budget;
      break;
    }
    auto pick = [&]() -> const Individual& {
      return pop[ctx.rng.index(pop.size())];
    };
    auto offspring = make_offspring(ctx, cfg, p_m, pick);
    for (auto& child : offspring) pop.push_back(std::move(child));
    pop = detail::age_environmental(std::move(pop), ctx.archive, cfg.mu);
    ++result.generations;
  }
  return pop;
}

}  // namespace

RunResult run_algorithm(const AlgorithmConfig& cfg, const ProblemInstance& p,
                        std::vector<Individual> init,
                        std::size_t init_eval_cost, std::size_t eval_budget,
                        std::chrono::duration<double> wallclock_limit,
                        std::size_t metric_cadence, const MetricHook& hook,
                        Rng& rng) {
  if (cfg.mu == 0 || cfg.lambda == 0)
    throw std::invalid_argument("run_algorithm: mu and lambda must be > 0");
  if (init.size() != cfg.mu)
    throw std::invalid_argument(
        "run_algorithm: initial population must hold exactly mu individuals");
  for (const auto& ind : init)
    if (!ind.evaluated())
      throw std::invalid_argument(
          "run_algorithm: initial population must be evaluated");
  if (eval_budget < init_eval_cost)
    throw std::invalid_argument(
        "run_algorithm: budget cannot cover the initialization fill");

  const double p_m =
      cfg.p_mutation < 0.0 ? 1.0 / static_cast<double>(p.n) : cfg.p_mutation;

  RunContext ctx{p,
                 eval_budget,
                 Clock::now(),
                 wallclock_limit,
                 std::max<std::size_t>(1, metric_cadence),
                 &hook,
                 rng,
                 {}};
  ctx.evals = init_eval_cost;
  ctx.next_mark =
      (ctx.evals / ctx.cadence + (ctx.evals % ctx.cadence ? 1 : 0)) *
      ctx.cadence;
  if (ctx.next_mark == 0) ctx.next_mark = ctx.cadence;
  for (const auto& ind : init) archive_insert(ctx.archive, ind);

  RunResult result;
  std::vector<Individual> report;
  switch (cfg.algorithm) {
    case Algorithm::Nsga2:
      report = run_nsga2(ctx, cfg, p_m, std::move(init), result);
      break;
    case Algorithm::Spea2:
      report = run_spea2(ctx, cfg, p_m, std::move(init), result);
      break;
    case Algorithm::Ibea:
      report = run_ibea(ctx, cfg, p_m, std::move(init), result);
      break;
    case Algorithm::SmsEmoa:
      report = run_smsemoa(ctx, cfg, p_m, std::move(init), result);
      break;
    case Algorithm::Age:
      report = run_age(ctx, cfg, p_m, std::move(init), result);
      break;
  }
  ctx.final_sample(report);
  result.final_population = std::move(report);
  result.archive = std::move(ctx.archive);
  result.evals_used = ctx.evals;
  return result;
}

}  // namespace moseed
