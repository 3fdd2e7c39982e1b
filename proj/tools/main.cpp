#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moseed/harness.hpp"
#include "moseed/metrics.hpp"
#include "moseed/problems.hpp"
#include "moseed/seeding.hpp"
#include "moseed/stats.hpp"

namespace {

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

int cmd_seed(const std::string& problem, const std::string& scheme,
             std::uint64_t seed, const std::string& out_path) {
  const auto& p = moseed::find_problem(problem);
  moseed::Rng rng(seed);
  const auto set = moseed::generate_seeds(p, moseed::parse_scheme(scheme), rng);
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return 1;
  }
  moseed::save_seed_set(os, set, p);
  std::printf("wrote %zu seeds (%zu evaluations) to %s\n", set.seeds.size(),
              set.evals_consumed, out_path.c_str());
  return 0;
}

int cmd_run(const moseed::ExperimentConfig& cfg) {
  cfg.validate();
  const auto outputs = moseed::run_experiment(cfg);
  const std::string dir = moseed::persist_experiment(cfg, outputs);
  std::vector<double> alphas;
  for (const auto& out : outputs) {
    const auto& r = out.record;
    if (!r.error.empty()) {
      std::printf("rep %zu: FAILED: %s\n", r.repetition, r.error.c_str());
      continue;
    }
    std::printf("rep %zu: alpha=%.6g moea_evals=%zu generations=%zu %s\n",
                r.repetition, r.final_alpha, r.moea_evals, r.generations,
                moseed::to_string(r.termination).c_str());
    alphas.push_back(r.final_alpha);
  }
  if (!alphas.empty())
    std::printf("median final alpha over %zu runs: %.6g\n", alphas.size(),
                moseed::median(alphas));
  std::printf("wrote %s\n", dir.c_str());
  return alphas.empty() ? 1 : 0;
}

int cmd_table(const std::string& dir, const std::string& scheme,
              const std::string& csv_path) {
  const auto rows = moseed::build_table(dir, moseed::parse_scheme(scheme));
  if (rows.empty()) {
    std::cerr << "no matched noseed/" << scheme << " scenarios under " << dir
              << "\n";
    return 1;
  }
  std::cout << moseed::emit_table_text(rows);
  if (!csv_path.empty()) {
    std::ofstream os(csv_path, std::ios::binary);
    os << moseed::emit_table_csv(rows);
    std::printf("wrote %s\n", csv_path.c_str());
  }
  return 0;
}

int cmd_front(const std::string& problem, std::size_t count,
              const std::string& out_path) {
  const auto& p = moseed::find_problem(problem);
  const std::size_t n = count ? count : moseed::default_front_sample_size(p);
  moseed::Rng rng = moseed::front_rng(p, n);
  const auto& pts = moseed::cached_front(p, n, rng);
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return 1;
  }
  moseed::write_objectives_csv(os, pts);
  std::printf("wrote %zu front points to %s\n", pts.size(), out_path.c_str());
  return 0;
}

int cmd_rank(const std::string& dir, const std::string& scheme) {
  const auto pairs =
      moseed::collect_pairs(dir, moseed::parse_scheme(scheme));
  const auto report = moseed::aggregate_rank_report(pairs);
  std::printf("matched pairs: %zu\n", pairs.size());
  std::printf("mean rank unseeded: %.4f\n", report.mean_unseeded);
  std::printf("mean rank seeded:   %.4f\n", report.mean_seeded);
  std::printf("rank-sum p-value:   %.6g\n", report.p_value);
  std::printf("%s\n", report.verdict.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "seeded multi-objective evolutionary optimization experiments"};
  app.require_subcommand(1);

  auto* seed_cmd =
      app.add_subcommand("seed", "generate and persist a seed set");
  std::string seed_problem = "zdt1";
  std::string seed_scheme = "cornersandcentre";
  std::uint64_t seed_value = 1;
  std::string seed_out = "seeds.csv";
  seed_cmd->add_option("--problem", seed_problem,
                       "instance: " + joined(moseed::problem_names()));
  seed_cmd->add_option("--scheme", seed_scheme,
                       "cornersandcentre or linearcombinations");
  seed_cmd->add_option("--seed", seed_value, "rng seed");
  seed_cmd->add_option("--out", seed_out, "output csv path");

  auto* run_cmd =
      app.add_subcommand("run", "run one experiment and persist the records");
  std::string config_path;
  run_cmd->add_option("--config", config_path, "key=value config file");
  std::string run_problem, run_algorithm, run_scheme, run_out;
  std::uint64_t run_budget = 0, run_reps = 0, run_cadence = 0, run_front = 0;
  std::uint64_t run_mu = 0, run_lambda = 0, run_workers = 0, run_seed = 0;
  long long run_charge = -2;
  double run_wallclock = 0.0;
  run_cmd->add_option("--problem", run_problem, "problem instance");
  run_cmd->add_option("--algorithm", run_algorithm,
                      joined(moseed::algorithm_names()));
  run_cmd->add_option("--scheme", run_scheme,
                      "noseed, cornersandcentre or linearcombinations");
  run_cmd->add_option("--total-budget", run_budget, "fitness evaluations");
  run_cmd->add_option("--charge", run_charge,
                      "seeding charge in evaluations (-1: 10% default)");
  run_cmd->add_option("--wallclock", run_wallclock, "seconds per repetition");
  run_cmd->add_option("--repetitions", run_reps, "independent repetitions");
  run_cmd->add_option("--base-seed", run_seed, "base rng seed");
  run_cmd->add_option("--cadence", run_cadence,
                      "evaluations between alpha samples");
  run_cmd->add_option("--front-samples", run_front, "reference front size");
  run_cmd->add_option("--mu", run_mu, "population size");
  run_cmd->add_option("--lambda", run_lambda, "offspring per generation");
  run_cmd->add_option("--out", run_out, "output directory");
  run_cmd->add_option("--workers", run_workers, "parallel repetitions");

  auto* table_cmd = app.add_subcommand(
      "table", "seeded-vs-unseeded comparison table from run directories");
  std::string table_dir = "out";
  std::string table_scheme = "cornersandcentre";
  std::string table_csv;
  table_cmd->add_option("--dir", table_dir, "experiment output root");
  table_cmd->add_option("--scheme", table_scheme, "seeded arm to compare");
  table_cmd->add_option("--csv", table_csv, "also write machine-readable csv");

  auto* front_cmd =
      app.add_subcommand("front", "export a reference front sample");
  std::string front_problem = "zdt1";
  std::uint64_t front_count = 0;
  std::string front_out = "front.csv";
  front_cmd->add_option("--problem", front_problem, "problem instance");
  front_cmd->add_option("--count", front_count,
                        "sample size (0: per-problem default)");
  front_cmd->add_option("--out", front_out, "output csv path");

  auto* rank_cmd = app.add_subcommand(
      "rank", "aggregate rank significance report across scenarios");
  std::string rank_dir = "out";
  std::string rank_scheme = "cornersandcentre";
  rank_cmd->add_option("--dir", rank_dir, "experiment output root");
  rank_cmd->add_option("--scheme", rank_scheme, "seeded arm to compare");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*seed_cmd)
      return cmd_seed(seed_problem, seed_scheme, seed_value, seed_out);
    if (*run_cmd) {
      moseed::ExperimentConfig cfg;
      if (!config_path.empty()) cfg = moseed::load_config_file(config_path);
      if (run_cmd->count("--problem")) cfg.problem = run_problem;
      if (run_cmd->count("--algorithm"))
        cfg.algorithm = moseed::parse_algorithm(run_algorithm);
      if (run_cmd->count("--scheme"))
        cfg.scheme = moseed::parse_scheme(run_scheme);
      if (run_cmd->count("--total-budget")) cfg.total_budget = run_budget;
      if (run_cmd->count("--charge")) cfg.seeding_budget_charge = run_charge;
      if (run_cmd->count("--wallclock")) cfg.wallclock_seconds = run_wallclock;
      if (run_cmd->count("--repetitions")) cfg.repetitions = run_reps;
      if (run_cmd->count("--base-seed")) cfg.base_seed = run_seed;
      if (run_cmd->count("--cadence")) cfg.metric_cadence = run_cadence;
      if (run_cmd->count("--front-samples")) cfg.front_sample_size = run_front;
      if (run_cmd->count("--mu")) cfg.mu = run_mu;
      if (run_cmd->count("--lambda")) cfg.lambda = run_lambda;
      if (run_cmd->count("--out")) cfg.out_dir = run_out;
      if (run_cmd->count("--workers")) cfg.workers = run_workers;
      return cmd_run(cfg);
    }
    if (*table_cmd) return cmd_table(table_dir, table_scheme, table_csv);
    if (*front_cmd) return cmd_front(front_problem, front_count, front_out);
    if (*rank_cmd) return cmd_rank(rank_dir, rank_scheme);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
