#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "moseed/metrics.hpp"
#include "moseed/moea.hpp"
#include "moseed/problems.hpp"
#include "moseed/seeding.hpp"

using namespace moseed;
using namespace std::chrono_literals;

namespace {

std::vector<ObjectiveVector> random_objs(Rng& rng, std::size_t count,
                                         std::size_t d, bool duplicates) {
  std::vector<ObjectiveVector> objs(count, ObjectiveVector(d));
  for (auto& o : objs)
    for (auto& v : o) v = duplicates ? double(rng.index(4)) : rng.uniform();
  return objs;
}

// iterative peeling: a front is everything not dominated by a live point
std::vector<std::vector<std::size_t>> nds_oracle(
    const std::vector<ObjectiveVector>& objs) {
  std::vector<bool> assigned(objs.size(), false);
  std::vector<std::vector<std::size_t>> fronts;
  std::size_t left = objs.size();
  while (left > 0) {
    std::vector<std::size_t> front;
    for (std::size_t i = 0; i < objs.size(); ++i) {
      if (assigned[i]) continue;
      bool dominated = false;
      for (std::size_t j = 0; j < objs.size() && !dominated; ++j)
        if (j != i && !assigned[j] && dominates(objs[j], objs[i]))
          dominated = true;
      if (!dominated) front.push_back(i);
    }
    for (std::size_t i : front) assigned[i] = true;
    left -= front.size();
    fronts.push_back(std::move(front));
  }
  return fronts;
}

// direct greedy recompute of the SPEA2 truncation
std::vector<std::size_t> truncate_oracle(
    const std::vector<ObjectiveVector>& objs, std::size_t target) {
  std::vector<bool> alive(objs.size(), true);
  std::size_t alive_count = objs.size();
  auto profile = [&](std::size_t i) {
    std::vector<double> p;
    for (std::size_t j = 0; j < objs.size(); ++j) {
      if (j == i || !alive[j]) continue;
      double s = 0.0;
      for (std::size_t c = 0; c < objs[i].size(); ++c)
        s += (objs[i][c] - objs[j][c]) * (objs[i][c] - objs[j][c]);
      p.push_back(s);
    }
    std::sort(p.begin(), p.end());
    return p;
  };
  while (alive_count > target) {
    std::size_t victim = objs.size();
    std::vector<double> victim_profile;
    for (std::size_t i = 0; i < objs.size(); ++i) {
      if (!alive[i]) continue;
      auto p = profile(i);
      if (victim == objs.size() ||
          std::lexicographical_compare(p.begin(), p.end(),
                                       victim_profile.begin(),
                                       victim_profile.end())) {
        victim = i;
        victim_profile = std::move(p);
      }
    }
    alive[victim] = false;
    --alive_count;
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < objs.size(); ++i)
    if (alive[i]) kept.push_back(i);
  return kept;
}

double alpha_of(const std::vector<ObjectiveVector>& archive,
                const std::vector<ObjectiveVector>& pool,
                const std::vector<bool>& alive, std::size_t skip) {
  double outer = -std::numeric_limits<double>::infinity();
  for (const auto& a : archive) {
    double inner = std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q < pool.size(); ++q) {
      if (!alive[q] || q == skip) continue;
      double m = -std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < a.size(); ++c)
        m = std::max(m, pool[q][c] - a[c]);
      inner = std::min(inner, m);
    }
    outer = std::max(outer, inner);
  }
  return outer;
}

// direct greedy recompute of the AGE environmental step
std::vector<std::size_t> age_oracle(const std::vector<ObjectiveVector>& pool,
                                    const std::vector<ObjectiveVector>& archive,
                                    std::size_t mu) {
  std::vector<bool> alive(pool.size(), true);
  std::size_t alive_count = pool.size();
  while (alive_count > mu) {
    std::size_t victim = pool.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (!alive[p]) continue;
      const double a = alpha_of(archive, pool, alive, p);
      if (a < best) {
        best = a;
        victim = p;
      }
    }
    alive[victim] = false;
    --alive_count;
  }
  std::vector<std::size_t> kept;
  for (std::size_t p = 0; p < pool.size(); ++p)
    if (alive[p]) kept.push_back(p);
  return kept;
}

std::vector<Individual> make_individuals(
    const std::vector<ObjectiveVector>& objs) {
  std::vector<Individual> out(objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i) out[i].objectives = objs[i];
  return out;
}

std::vector<Individual> random_population(const ProblemInstance& p,
                                          std::size_t count, Rng& rng) {
  return initialize_population(SeedSet{}, count, p, rng);
}

bool mutually_nondominated(const std::vector<Individual>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = 0; j < set.size(); ++j)
      if (i != j && dominates(set[i].objectives, set[j].objectives))
        return false;
  return true;
}

}  // namespace

TEST_CASE("algorithm names") {
  CHECK(algorithm_names() ==
        std::vector<std::string>{"nsga2", "spea2", "ibea", "smsemoa", "age"});
  for (const auto& name : algorithm_names())
    CHECK(to_string(parse_algorithm(name)) == name);
  CHECK(parse_algorithm("NSGA2") == Algorithm::Nsga2);
  CHECK_THROWS_AS(parse_algorithm("nsga3"), std::invalid_argument);
}

TEST_CASE("non-dominated sorting matches iterative peeling") {
  Rng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.index(120);
    const std::size_t d = 2 + rng.index(3);
    const auto objs = random_objs(rng, n, d, trial % 2 == 0);
    const auto fast = fast_nondominated_sort(objs);
    const auto slow = nds_oracle(objs);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t f = 0; f < fast.size(); ++f) CHECK(fast[f] == slow[f]);
  }
  CHECK(fast_nondominated_sort({{1.0, 2.0}}) ==
        std::vector<std::vector<std::size_t>>{{0}});
  CHECK(fast_nondominated_sort({{1, 1}, {1, 1}}) ==
        std::vector<std::vector<std::size_t>>{{0, 1}});
}

TEST_CASE("crowding distance") {
  const auto small = crowding_distance({{1, 2}, {2, 1}});
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(small == std::vector<double>{inf, inf});

  const auto d = crowding_distance({{0, 3}, {1, 2}, {2, 1}, {3, 0}});
  CHECK(d[0] == inf);
  CHECK(d[3] == inf);
  CHECK(d[1] == doctest::Approx(4.0 / 3.0));
  CHECK(d[2] == doctest::Approx(4.0 / 3.0));

  // a degenerate dimension contributes nothing instead of dividing by zero
  const auto flat = crowding_distance({{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  CHECK(flat[1] == doctest::Approx(2.0 / 3.0));
  CHECK(std::isfinite(flat[1]));
}

TEST_CASE("sbx crossover") {
  const Bounds b = Bounds::uniform(5, -100.0, 100.0);
  Rng rng(60);
  Individual a, c;
  a.decision = {1, 2, 3, 4, 5};
  c.decision = {5, 4, 3, 2, 1};

  auto [u, v] = sbx_crossover(a, c, 0.0, 20.0, b, rng);
  CHECK(u.decision == a.decision);
  CHECK(v.decision == c.decision);
  CHECK_FALSE(u.evaluated());

  for (int trial = 0; trial < 100; ++trial) {
    auto [x, y] = sbx_crossover(a, c, 1.0, 15.0, b, rng);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(x.decision[i] + y.decision[i] ==
            doctest::Approx(a.decision[i] + c.decision[i]).epsilon(1e-10));
      CHECK(x.decision[i] >= b.lower[i]);
      CHECK(x.decision[i] <= b.upper[i]);
    }
  }

  // with tight bounds the children are clamped but still legal
  const Bounds tight = Bounds::uniform(5, 2.0, 4.0);
  Individual ta, tc;
  ta.decision = {2, 2, 2, 2, 2};
  tc.decision = {4, 4, 4, 4, 4};
  for (int trial = 0; trial < 50; ++trial) {
    auto [x, y] = sbx_crossover(ta, tc, 1.0, 2.0, tight, rng);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(x.decision[i] >= 2.0);
      CHECK(x.decision[i] <= 4.0);
      CHECK(y.decision[i] >= 2.0);
      CHECK(y.decision[i] <= 4.0);
    }
  }
}

TEST_CASE("polynomial mutation") {
  const Bounds b = Bounds::uniform(8, 0.0, 1.0);
  Rng rng(61);
  Individual x;
  x.decision.assign(8, 0.5);

  const auto same = polynomial_mutation(x, 0.0, 20.0, b, rng);
  CHECK(same.decision == x.decision);
  CHECK_FALSE(same.evaluated());

  int changed = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = polynomial_mutation(x, 1.0, 20.0, b, rng);
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(m.decision[i] >= 0.0);
      CHECK(m.decision[i] <= 1.0);
      if (m.decision[i] != 0.5) ++changed;
    }
  }
  CHECK(changed > 300);  // p_m = 1 perturbs nearly every variable
}

TEST_CASE("archive insertion keeps a clean non-dominated set") {
  std::vector<Individual> archive;
  auto ind = [](std::initializer_list<double> o) {
    Individual x;
    x.objectives = o;
    return x;
  };
  CHECK(archive_insert(archive, ind({2, 2})));
  CHECK_FALSE(archive_insert(archive, ind({2, 2})));   // duplicate
  CHECK_FALSE(archive_insert(archive, ind({3, 2})));   // dominated
  CHECK(archive_insert(archive, ind({3, 1})));         // incomparable
  CHECK(archive_insert(archive, ind({1, 1})));         // evicts both
  REQUIRE(archive.size() == 1);
  CHECK(archive[0].objectives == ObjectiveVector{1, 1});

  // random stress: archive equals the distinct non-dominated subset
  Rng rng(62);
  const auto objs = random_objs(rng, 200, 2, true);
  archive.clear();
  for (const auto& o : objs) {
    Individual x;
    x.objectives = o;
    archive_insert(archive, x);
  }
  std::vector<ObjectiveVector> expected;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < objs.size() && keep; ++j) {
      if (j != i && dominates(objs[j], objs[i])) keep = false;
      if (j < i && objs[j] == objs[i]) keep = false;
    }
    if (keep) expected.push_back(objs[i]);
  }
  std::vector<ObjectiveVector> got;
  for (const auto& m : archive) got.push_back(m.objectives);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
}

TEST_CASE("spea2 truncation matches the direct greedy recompute") {
  Rng rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.index(30);
    const std::size_t target = 1 + rng.index(n);
    // half the trials use a coarse grid so exact distance ties occur
    const auto objs = random_objs(rng, n, 2 + rng.index(2), trial % 2 == 0);
    CHECK(detail::spea2_truncate(objs, target) ==
          truncate_oracle(objs, target));
  }
  // duplicates have all-equal zero leading distances
  const std::vector<ObjectiveVector> dup{{1, 1}, {1, 1}, {1, 1}, {0, 2}};
  CHECK(detail::spea2_truncate(dup, 2) == truncate_oracle(dup, 2));
}

TEST_CASE("age environmental selection matches the direct greedy recompute") {
  Rng rng(64);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 3 + rng.index(25);
    const std::size_t mu = 1 + rng.index(m - 1);
    const std::size_t d = 2 + rng.index(2);
    const auto pool_objs = random_objs(rng, m, d, trial % 2 == 0);
    const auto arch_objs = random_objs(rng, 1 + rng.index(15), d, false);
    const auto kept = detail::age_environmental(
        make_individuals(pool_objs), make_individuals(arch_objs), mu);
    const auto expected = age_oracle(pool_objs, arch_objs, mu);
    REQUIRE(kept.size() == expected.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
      CHECK(kept[i].objectives == pool_objs[expected[i]]);
  }
}

TEST_CASE("every algorithm spends the budget exactly when it divides") {
  const auto& p = find_problem("zdt1");
  AlgorithmConfig cfg;
  cfg.mu = 20;
  cfg.lambda = 20;
  for (const auto& name : algorithm_names()) {
    cfg.algorithm = parse_algorithm(name);
    CAPTURE(name);
    Rng rng(70);
    auto init = random_population(p, 20, rng);
    const auto r = run_algorithm(cfg, p, std::move(init), 20, 220, 3600s, 1000,
                                 {}, rng);
    CHECK(r.evals_used == 220);
    CHECK(r.termination == TerminationReason::Budget);
    CHECK(r.final_population.size() == 20);
    for (const auto& ind : r.final_population) CHECK(ind.evaluated());
    CHECK(r.generations ==
          (cfg.algorithm == Algorithm::SmsEmoa ? 200u : 10u));
    CHECK_FALSE(r.archive.empty());
    CHECK(mutually_nondominated(r.archive));
  }
}

TEST_CASE("a non-divisible budget stops before overspending") {
  const auto& p = find_problem("zdt1");
  AlgorithmConfig cfg;
  cfg.mu = 20;
  cfg.lambda = 20;
  for (const auto& name : algorithm_names()) {
    cfg.algorithm = parse_algorithm(name);
    CAPTURE(name);
    Rng rng(71);
    auto init = random_population(p, 20, rng);
    const auto r = run_algorithm(cfg, p, std::move(init), 20, 219, 3600s, 1000,
                                 {}, rng);
    if (cfg.algorithm == Algorithm::SmsEmoa)
      CHECK(r.evals_used == 219);
    else
      CHECK(r.evals_used == 200);
    CHECK(r.termination == TerminationReason::Budget);
  }
}

TEST_CASE("a zero wallclock stops immediately after initialization") {
  const auto& p = find_problem("zdt1");
  AlgorithmConfig cfg;
  cfg.mu = 10;
  cfg.lambda = 10;
  for (const auto& name : algorithm_names()) {
    cfg.algorithm = parse_algorithm(name);
    CAPTURE(name);
    Rng rng(72);
    auto init = random_population(p, 10, rng);
    std::size_t hook_calls = 0;
    std::size_t hook_evals = 0;
    MetricHook hook = [&](std::size_t evals, const std::vector<Individual>& rep,
                          const std::vector<Individual>& arch) {
      ++hook_calls;
      hook_evals = evals;
      CHECK_FALSE(rep.empty());
      CHECK_FALSE(arch.empty());
    };
    const auto r = run_algorithm(cfg, p, std::move(init), 10, 100000, 0s, 1000,
                                 hook, rng);
    CHECK(r.termination == TerminationReason::Wallclock);
    CHECK(r.evals_used == 10);
    CHECK(r.generations == 0);
    CHECK(hook_calls == 1);  // the final sample always fires
    CHECK(hook_evals == 10);
  }
}

TEST_CASE("invalid setups are rejected") {
  const auto& p = find_problem("zdt1");
  AlgorithmConfig cfg;
  cfg.mu = 5;
  cfg.lambda = 5;
  Rng rng(73);
  auto init = random_population(p, 5, rng);

  AlgorithmConfig bad = cfg;
  bad.mu = 0;
  CHECK_THROWS_AS(
      run_algorithm(bad, p, init, 5, 100, 3600s, 100, {}, rng),
      std::invalid_argument);

  CHECK_THROWS_AS(
      run_algorithm(cfg, p, std::vector<Individual>(init.begin(),
                                                    init.begin() + 4),
                    4, 100, 3600s, 100, {}, rng),
      std::invalid_argument);

  auto raw = init;
  raw[2].objectives.clear();
  CHECK_THROWS_AS(run_algorithm(cfg, p, raw, 5, 100, 3600s, 100, {}, rng),
                  std::invalid_argument);

  CHECK_THROWS_AS(run_algorithm(cfg, p, init, 5, 4, 3600s, 100, {}, rng),
                  std::invalid_argument);
}

TEST_CASE("the metric hook fires at the cadence and once at termination") {
  const auto& p = find_problem("zdt1");
  AlgorithmConfig cfg;
  cfg.mu = 20;
  cfg.lambda = 20;
  for (const auto& name : algorithm_names()) {
    cfg.algorithm = parse_algorithm(name);
    CAPTURE(name);
    Rng rng(74);
    auto init = random_population(p, 20, rng);
    std::vector<std::size_t> marks;
    MetricHook hook = [&](std::size_t evals, const std::vector<Individual>&,
                          const std::vector<Individual>&) {
      marks.push_back(evals);
    };
    const auto r = run_algorithm(cfg, p, std::move(init), 20, 220, 3600s, 50,
                                 hook, rng);
    REQUIRE_FALSE(marks.empty());
    for (std::size_t i = 1; i < marks.size(); ++i)
      CHECK(marks[i] > marks[i - 1]);
    CHECK(marks.back() == r.evals_used);
    if (cfg.algorithm == Algorithm::SmsEmoa)
      // single-evaluation steps touch every multiple of the cadence
      CHECK(marks == std::vector<std::size_t>{50, 100, 150, 200, 220});
    else
      CHECK(marks == std::vector<std::size_t>{60, 100, 160, 200, 220});
  }
}

TEST_CASE("runs are deterministic given the rng seed") {
  const auto& p = find_problem("zdt3");
  AlgorithmConfig cfg;
  cfg.mu = 16;
  cfg.lambda = 16;
  for (const auto& name : algorithm_names()) {
    cfg.algorithm = parse_algorithm(name);
    CAPTURE(name);
    std::vector<std::vector<std::size_t>> mark_log;
    std::vector<std::vector<DecisionVector>> pop_log;
    for (int run = 0; run < 2; ++run) {
      Rng rng(75);
      auto init = random_population(p, 16, rng);
      std::vector<std::size_t> marks;
      MetricHook hook = [&](std::size_t evals, const std::vector<Individual>&,
                            const std::vector<Individual>&) {
        marks.push_back(evals);
      };
      const auto r = run_algorithm(cfg, p, std::move(init), 16, 480, 3600s, 64,
                                   hook, rng);
      std::vector<DecisionVector> decisions;
      for (const auto& ind : r.final_population)
        decisions.push_back(ind.decision);
      mark_log.push_back(std::move(marks));
      pop_log.push_back(std::move(decisions));
    }
    CHECK(mark_log[0] == mark_log[1]);
    CHECK(pop_log[0] == pop_log[1]);
  }
}

TEST_CASE("four-objective runs exercise the generic hypervolume path") {
  const auto& p = find_problem("dtlz2_d4");
  AlgorithmConfig cfg;
  cfg.algorithm = Algorithm::SmsEmoa;
  cfg.mu = 12;
  cfg.lambda = 1;
  Rng rng(76);
  auto init = random_population(p, 12, rng);
  const auto r = run_algorithm(cfg, p, std::move(init), 12, 112, 3600s, 1000,
                               {}, rng);
  CHECK(r.evals_used == 112);
  CHECK(r.generations == 100);
  CHECK(r.final_population.size() == 12);
}

TEST_CASE("optimization actually improves the approximation of the front") {
  const auto& p = find_problem("zdt1");
  AlgorithmConfig cfg;
  cfg.mu = 40;
  cfg.lambda = 40;
  for (const auto& name : algorithm_names()) {
    cfg.algorithm = parse_algorithm(name);
    CAPTURE(name);
    Rng rng(77);
    auto init = random_population(p, 40, rng);
    std::vector<ObjectiveVector> init_objs;
    for (const auto& ind : init) init_objs.push_back(ind.objectives);

    const auto r = run_algorithm(cfg, p, std::move(init), 40, 20000, 3600s,
                                 100000, {}, rng);
    std::vector<ObjectiveVector> final_objs;
    for (const auto& ind : r.archive) final_objs.push_back(ind.objectives);

    Rng fr = front_rng(p, 2000);
    const double before = approximation_of_front(p, init_objs, 2000, fr);
    const double after = approximation_of_front(p, final_objs, 2000, fr);
    CHECK(after < before);
    CHECK(after < 0.5 * before);  // substantial progress, not noise
  }
}
