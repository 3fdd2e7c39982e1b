#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moseed/core.hpp"
#include "moseed/moea.hpp"
#include "moseed/seeding.hpp"
#include "moseed/stats.hpp"

namespace moseed {

struct ExperimentConfig {
  std::string problem = "zdt1";
  Algorithm algorithm = Algorithm::Nsga2;
  SeedingScheme scheme = SeedingScheme::NoSeed;
  std::size_t total_budget = 1000000;
  // Nominal evaluations charged to the seeding phase and deducted from the
  // MOEA budget, regardless of what seeding actually consumed. Negative
  // means "default": ceil(0.10 * total_budget) for seeded schemes, 0 for
  // NoSeed.
  long long seeding_budget_charge = -1;
  double wallclock_seconds = 60.0;  // the "paper" preset is 4 h
  std::size_t repetitions = 100;
  std::uint64_t base_seed = 1;
  std::size_t metric_cadence = 1000;  // evaluations between alpha samples
  std::size_t front_sample_size = 0;  // 0 -> per-problem default
  std::size_t mu = 100;
  std::size_t lambda = 100;
  std::string out_dir = "out";
  std::size_t workers = 1;

  std::size_t resolved_charge() const;
  std::size_t resolved_front_sample_size() const;
  // Canonical key=value listing of every result-affecting field.
  std::string canonical_text() const;
  // FNV-1a hash of canonical_text(), 16 hex digits.
  std::string fingerprint() const;
  void validate() const;  // throws std::invalid_argument
};

// Flat key=value text, '#' comments and blank lines ignored. Unknown keys are
// errors. wallclock_seconds additionally accepts the named preset "paper"
// (4 h).
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

struct TrajectoryPoint {
  std::size_t evals = 0;  // seeded runs are offset by the scheme's nominal budget
  double alpha = 0.0;

  friend bool operator==(const TrajectoryPoint&,
                         const TrajectoryPoint&) = default;
};

struct RunRecord {
  std::string config_fingerprint;
  std::size_t repetition = 0;
  std::uint64_t rng_seed = 0;
  std::vector<TrajectoryPoint> trajectory;  // strictly increasing evals
  std::size_t seeding_evals = 0;            // actually consumed by seeding
  std::size_t moea_evals = 0;               // fill + offspring evaluations
  std::size_t generations = 0;
  TerminationReason termination = TerminationReason::Budget;
  bool deterministic = true;  // false for wall-clock-terminated runs
  double final_alpha = 0.0;   // equals the last trajectory sample
  std::vector<ObjectiveVector> final_population;
  std::string error;  // non-empty when the repetition failed
};

struct RepetitionOutput {
  RunRecord record;
  SeedSet seeds;
};

// Runs every repetition (rng seed = base_seed XOR repetition index) and
// returns the outputs in repetition order. Per-repetition failures are
// captured in record.error without aborting the siblings.
std::vector<RepetitionOutput> run_experiment(const ExperimentConfig& cfg);

// out_dir/<problem>/<algorithm>/<scheme>
std::string run_directory(const ExperimentConfig& cfg);

// Writes config.txt, rep<k>.run, rep<k>.seeds (seeded schemes only) and
// trajectory.csv under run_directory(cfg); returns that directory.
std::string persist_experiment(const ExperimentConfig& cfg,
                               const std::vector<RepetitionOutput>& outputs);

std::string format_run_record(const RunRecord& rec);
RunRecord parse_run_record(const std::string& text);
RunRecord load_run_record(const std::string& path);

// CSV with header problem,algorithm,scheme,rep,evals,alpha; one row per
// trajectory sample. With include_mean, a rep="mean" series is appended for
// every evals value present in all successful repetitions.
std::string emit_trajectory(const ExperimentConfig& cfg,
                            const std::vector<RepetitionOutput>& outputs,
                            bool include_mean);

struct TableRow {
  std::string problem;
  std::string algorithm;
  std::string scheme;  // the seeded arm compared against noseed
  ComparisonCell cell;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

// Fixed-width text table; ratios to two decimals, NotRun rendered as a dash.
std::string emit_table_text(const std::vector<TableRow>& rows);
// Machine-readable variant; parse_table_csv round-trips it exactly.
std::string emit_table_csv(const std::vector<TableRow>& rows);
std::vector<TableRow> parse_table_csv(const std::string& csv);

// Builds a row per (problem, algorithm) found under dir that has both a
// noseed arm and the given scheme's arm. A cell is NotRun when either arm
// has no successful repetition or never completed a generation.
std::vector<TableRow> build_table(const std::string& dir,
                                  SeedingScheme scheme);

struct RankReport {
  std::vector<double> unseeded_ranks;  // pooled, one per matched repetition
  std::vector<double> seeded_ranks;
  double mean_unseeded = 0.0;
  double mean_seeded = 0.0;
  double p_value = 1.0;
  std::string verdict;  // "seeding improves" | "seeding worsens" |
                        // "no significant difference"
};

// Matched final alphas of one repetition of one scenario.
struct PairedAlphas {
  double unseeded = 0.0;
  double seeded = 0.0;
};

// Ranks each pair (1 = better alpha, 2 = worse, 1.5 each on a tie), pools
// the ranks per scheme and applies the rank-sum test.
RankReport aggregate_rank_report(const std::vector<PairedAlphas>& pairs);

// Collects matched pairs for the scheme across all scenarios under dir.
// Throws when a scenario's arms have mismatched repetition indices.
std::vector<PairedAlphas> collect_pairs(const std::string& dir,
                                        SeedingScheme scheme);

}  // namespace moseed
