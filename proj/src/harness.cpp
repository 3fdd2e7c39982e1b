#include "moseed/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "moseed/metrics.hpp"
#include "moseed/problems.hpp"

namespace fs = std::filesystem;

namespace moseed {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Integer config values, also accepting scientific notation like 1e6.
std::uint64_t parse_unsigned(const std::string& key, const std::string& v) {
  try {
    if (v.find_first_of(".eE") != std::string::npos) {
      const double x = std::stod(v);
      if (x < 0 || x != std::floor(x) || x > 9.007199254740992e15)
        throw std::invalid_argument(v);
      return static_cast<std::uint64_t>(x);
    }
    return std::stoull(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad value for " + key + ": " + v);
  }
}

std::vector<ObjectiveVector> objectives_of(const std::vector<Individual>& v) {
  std::vector<ObjectiveVector> objs;
  objs.reserve(v.size());
  for (const auto& ind : v) objs.push_back(ind.objectives);
  return objs;
}

}  // namespace

// --------------------------------------------------------------- config

std::size_t ExperimentConfig::resolved_charge() const {
  if (scheme == SeedingScheme::NoSeed) return 0;
  if (seeding_budget_charge >= 0)
    return static_cast<std::size_t>(seeding_budget_charge);
  return (total_budget + 9) / 10;  // ceil(0.10 * total)
}

std::size_t ExperimentConfig::resolved_front_sample_size() const {
  if (front_sample_size > 0) return front_sample_size;
  return default_front_sample_size(find_problem(problem));
}

std::string ExperimentConfig::canonical_text() const {
  std::ostringstream os;
  os << "problem=" << problem << '\n';
  os << "algorithm=" << to_string(algorithm) << '\n';
  os << "scheme=" << to_string(scheme) << '\n';
  os << "total_budget=" << total_budget << '\n';
  os << "seeding_budget_charge=" << resolved_charge() << '\n';
  os << "wallclock_seconds=" << fmt_double(wallclock_seconds) << '\n';
  os << "repetitions=" << repetitions << '\n';
  os << "base_seed=" << base_seed << '\n';
  os << "metric_cadence=" << metric_cadence << '\n';
  os << "front_sample_size=" << resolved_front_sample_size() << '\n';
  os << "mu=" << mu << '\n';
  os << "lambda=" << lambda << '\n';
  return os.str();
}

std::string ExperimentConfig::fingerprint() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical_text())));
  return buf;
}

void ExperimentConfig::validate() const {
  find_problem(problem);  // throws on unknown names
  if (total_budget == 0)
    throw std::invalid_argument("config: total_budget must be positive");
  if (repetitions == 0)
    throw std::invalid_argument("config: repetitions must be >= 1");
  if (mu == 0 || lambda == 0)
    throw std::invalid_argument("config: mu and lambda must be >= 1");
  if (metric_cadence == 0)
    throw std::invalid_argument("config: metric_cadence must be >= 1");
  if (workers == 0)
    throw std::invalid_argument("config: workers must be >= 1");
  if (wallclock_seconds <= 0.0)
    throw std::invalid_argument("config: wallclock_seconds must be positive");
  if (resolved_charge() >= total_budget)
    throw std::invalid_argument(
        "config: seeding_budget_charge must be smaller than total_budget");
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  for (const std::string& raw : split(text, '\n')) {
    std::string line = raw;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key=value, got: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "problem") {
      cfg.problem = value;
    } else if (key == "algorithm") {
      cfg.algorithm = parse_algorithm(value);
    } else if (key == "scheme") {
      cfg.scheme = parse_scheme(value);
    } else if (key == "total_budget") {
      cfg.total_budget = parse_unsigned(key, value);
    } else if (key == "seeding_budget_charge") {
      cfg.seeding_budget_charge =
          value == "-1" ? -1
                        : static_cast<long long>(parse_unsigned(key, value));
    } else if (key == "wallclock_seconds") {
      cfg.wallclock_seconds = value == "paper" ? 14400.0 : std::stod(value);
    } else if (key == "repetitions") {
      cfg.repetitions = parse_unsigned(key, value);
    } else if (key == "base_seed") {
      cfg.base_seed = parse_unsigned(key, value);
    } else if (key == "metric_cadence") {
      cfg.metric_cadence = parse_unsigned(key, value);
    } else if (key == "front_sample_size") {
      cfg.front_sample_size = parse_unsigned(key, value);
    } else if (key == "mu") {
      cfg.mu = parse_unsigned(key, value);
    } else if (key == "lambda") {
      cfg.lambda = parse_unsigned(key, value);
    } else if (key == "out_dir") {
      cfg.out_dir = value;
    } else if (key == "workers") {
      cfg.workers = parse_unsigned(key, value);
    } else {
      throw std::invalid_argument("config: unknown key: " + key);
    }
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config_text(os.str());
}

// ------------------------------------------------------------ experiment

namespace {

RepetitionOutput run_one_repetition(const ExperimentConfig& cfg,
                                    const ProblemInstance& p,
                                    const std::vector<ObjectiveVector>& front,
                                    const std::string& fingerprint,
                                    std::size_t rep) {
  RepetitionOutput out;
  RunRecord& rec = out.record;
  rec.config_fingerprint = fingerprint;
  rec.repetition = rep;
  rec.rng_seed = cfg.base_seed ^ static_cast<std::uint64_t>(rep);
  Rng rng(rec.rng_seed);

  out.seeds = generate_seeds(p, cfg.scheme, rng);
  rec.seeding_evals = out.seeds.evals_consumed;
  auto init = initialize_population(out.seeds, cfg.mu, p, rng);
  const std::size_t fill =
      cfg.mu - std::min(out.seeds.seeds.size(), cfg.mu);
  // The MOEA is charged the nominal rate even when seeding spent less; when
  // seeding overspends (the +1 re-evaluation per seed), the overrun is
  // deducted too so the per-run total never exceeds total_budget.
  const std::size_t deduction =
      std::max(cfg.resolved_charge(), rec.seeding_evals);
  const std::size_t moea_budget =
      cfg.total_budget > deduction ? cfg.total_budget - deduction : 0;
  // seeded trajectories are shifted right by the scheme's nominal budget
  const std::size_t offset = scheme_nominal_budget(cfg.scheme);

  if (cfg.scheme != SeedingScheme::NoSeed) {
    const double alpha0 =
        additive_approximation(front, objectives_of(out.seeds.seeds)).alpha;
    rec.trajectory.push_back({offset, alpha0});
  }
  MetricHook hook = [&](std::size_t evals,
                        const std::vector<Individual>& report,
                        const std::vector<Individual>&) {
    const double a =
        additive_approximation(front, objectives_of(report)).alpha;
    const std::size_t x = offset + evals;
    if (!rec.trajectory.empty() && rec.trajectory.back().evals == x)
      rec.trajectory.back().alpha = a;  // re-measure of the origin state
    else
      rec.trajectory.push_back({x, a});
  };

  AlgorithmConfig acfg;
  acfg.algorithm = cfg.algorithm;
  acfg.mu = cfg.mu;
  acfg.lambda = cfg.lambda;
  RunResult rr = run_algorithm(
      acfg, p, std::move(init), fill, moea_budget,
      std::chrono::duration<double>(cfg.wallclock_seconds),
      cfg.metric_cadence, hook, rng);

  rec.moea_evals = rr.evals_used;
  rec.generations = rr.generations;
  rec.termination = rr.termination;
  rec.deterministic = rr.termination == TerminationReason::Budget;
  rec.final_population = objectives_of(rr.final_population);
  rec.final_alpha = rec.trajectory.back().alpha;
  return out;
}

}  // namespace

std::vector<RepetitionOutput> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const ProblemInstance& p = find_problem(cfg.problem);
  const std::size_t fss = cfg.resolved_front_sample_size();
  Rng frng = front_rng(p, fss);
  const auto& front = cached_front(p, fss, frng);  // built once, shared
  const std::string fingerprint = cfg.fingerprint();

  std::vector<RepetitionOutput> outputs(cfg.repetitions);
  auto run_guarded = [&](std::size_t rep) {
    try {
      outputs[rep] = run_one_repetition(cfg, p, front, fingerprint, rep);
    } catch (const std::exception& e) {
      RepetitionOutput failed;
      failed.record.config_fingerprint = fingerprint;
      failed.record.repetition = rep;
      failed.record.rng_seed = cfg.base_seed ^ static_cast<std::uint64_t>(rep);
      failed.record.error = e.what();
      outputs[rep] = std::move(failed);
    }
  };

  const std::size_t nworkers = std::min(cfg.workers, cfg.repetitions);
  if (nworkers <= 1) {
    for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) run_guarded(rep);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (std::size_t w = 0; w < nworkers; ++w)
      pool.emplace_back([&] {
        while (true) {
          const std::size_t rep = next.fetch_add(1);
          if (rep >= cfg.repetitions) break;
          run_guarded(rep);
        }
      });
    for (auto& t : pool) t.join();
  }
  return outputs;
}

// ------------------------------------------------------------ persistence

std::string run_directory(const ExperimentConfig& cfg) {
  return cfg.out_dir + "/" + cfg.problem + "/" + to_string(cfg.algorithm) +
         "/" + to_string(cfg.scheme);
}

std::string format_run_record(const RunRecord& rec) {
  std::ostringstream os;
  os << "fingerprint " << rec.config_fingerprint << '\n';
  os << "repetition " << rec.repetition << '\n';
  os << "rng_seed " << rec.rng_seed << '\n';
  os << "seeding_evals " << rec.seeding_evals << '\n';
  os << "moea_evals " << rec.moea_evals << '\n';
  os << "generations " << rec.generations << '\n';
  os << "termination " << to_string(rec.termination) << '\n';
  os << "deterministic " << (rec.deterministic ? 1 : 0) << '\n';
  os << "final_alpha " << fmt_double(rec.final_alpha) << '\n';
  if (!rec.error.empty()) os << "error " << rec.error << '\n';
  os << "trajectory " << rec.trajectory.size() << '\n';
  for (const auto& pt : rec.trajectory)
    os << pt.evals << ' ' << fmt_double(pt.alpha) << '\n';
  const std::size_t cols =
      rec.final_population.empty() ? 0 : rec.final_population[0].size();
  os << "final_population " << rec.final_population.size() << ' ' << cols
     << '\n';
  for (const auto& f : rec.final_population) {
    for (std::size_t c = 0; c < f.size(); ++c)
      os << (c ? " " : "") << fmt_double(f[c]);
    os << '\n';
  }
  return os.str();
}

RunRecord parse_run_record(const std::string& text) {
  std::istringstream in(text);
  RunRecord rec;
  std::string key;
  auto expect = [&](const char* want) {
    if (!(in >> key) || key != want)
      throw std::runtime_error(std::string("run record: expected ") + want);
  };
  expect("fingerprint");
  in >> rec.config_fingerprint;
  expect("repetition");
  in >> rec.repetition;
  expect("rng_seed");
  in >> rec.rng_seed;
  expect("seeding_evals");
  in >> rec.seeding_evals;
  expect("moea_evals");
  in >> rec.moea_evals;
  expect("generations");
  in >> rec.generations;
  expect("termination");
  {
    std::string t;
    in >> t;
    rec.termination = t == "wallclock" ? TerminationReason::Wallclock
                                       : TerminationReason::Budget;
  }
  expect("deterministic");
  {
    int v = 1;
    in >> v;
    rec.deterministic = v != 0;
  }
  expect("final_alpha");
  in >> rec.final_alpha;
  if (!(in >> key)) throw std::runtime_error("run record: truncated");
  if (key == "error") {
    std::getline(in, rec.error);
    rec.error = trim(rec.error);
    if (!(in >> key)) throw std::runtime_error("run record: truncated");
  }
  if (key != "trajectory")
    throw std::runtime_error("run record: expected trajectory");
  std::size_t npts = 0;
  in >> npts;
  rec.trajectory.resize(npts);
  for (auto& pt : rec.trajectory) in >> pt.evals >> pt.alpha;
  expect("final_population");
  std::size_t rows = 0, cols = 0;
  in >> rows >> cols;
  rec.final_population.assign(rows, ObjectiveVector(cols, 0.0));
  for (auto& f : rec.final_population)
    for (auto& v : f) in >> v;
  if (!in) throw std::runtime_error("run record: malformed numeric field");
  return rec;
}

RunRecord load_run_record(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open run record: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_run_record(os.str());
}

std::string emit_trajectory(const ExperimentConfig& cfg,
                            const std::vector<RepetitionOutput>& outputs,
                            bool include_mean) {
  std::ostringstream os;
  os << "problem,algorithm,scheme,rep,evals,alpha\n";
  const std::string prefix = cfg.problem + "," + to_string(cfg.algorithm) +
                             "," + to_string(cfg.scheme) + ",";
  std::map<std::size_t, std::pair<double, std::size_t>> grid;  // sum, count
  std::size_t ok = 0;
  for (const auto& out : outputs) {
    if (!out.record.error.empty()) continue;
    ++ok;
    for (const auto& pt : out.record.trajectory) {
      os << prefix << out.record.repetition << ',' << pt.evals << ','
         << fmt_double(pt.alpha) << '\n';
      auto& cell = grid[pt.evals];
      cell.first += pt.alpha;
      cell.second += 1;
    }
  }
  if (include_mean && ok > 0) {
    for (const auto& [evals, cell] : grid) {
      if (cell.second != ok) continue;  // only the grid shared by all reps
      os << prefix << "mean," << evals << ','
         << fmt_double(cell.first / static_cast<double>(ok)) << '\n';
    }
  }
  return os.str();
}

std::string persist_experiment(const ExperimentConfig& cfg,
                               const std::vector<RepetitionOutput>& outputs) {
  const ProblemInstance& p = find_problem(cfg.problem);
  const std::string dir = run_directory(cfg);
  fs::create_directories(dir);
  {
    std::ofstream os(dir + "/config.txt", std::ios::binary);
    os << cfg.canonical_text();
  }
  for (const auto& out : outputs) {
    const std::string stem =
        dir + "/rep" + std::to_string(out.record.repetition);
    {
      std::ofstream os(stem + ".run", std::ios::binary);
      os << format_run_record(out.record);
    }
    if (cfg.scheme != SeedingScheme::NoSeed && out.record.error.empty()) {
      std::ofstream os(stem + ".seeds", std::ios::binary);
      save_seed_set(os, out.seeds, p);
    }
  }
  {
    std::ofstream os(dir + "/trajectory.csv", std::ios::binary);
    os << emit_trajectory(cfg, outputs, true);
  }
  return dir;
}

// ----------------------------------------------------------------- tables

std::string emit_table_text(const std::vector<TableRow>& rows) {
  std::size_t wp = 8, wa = 9, ws = 6;
  for (const auto& r : rows) {
    wp = std::max(wp, r.problem.size());
    wa = std::max(wa, r.algorithm.size());
    ws = std::max(ws, r.scheme.size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size() + 2, ' ');
  };
  std::ostringstream os;
  os << pad("problem", wp) << pad("algorithm", wa) << pad("scheme", ws)
     << "  ratio  sig    p-value        n\n";
  for (const auto& r : rows) {
    os << pad(r.problem, wp) << pad(r.algorithm, wa) << pad(r.scheme, ws);
    char buf[96];
    if (r.cell.not_run) {
      // em dash marks scenarios without a single completed generation
      std::snprintf(buf, sizeof(buf), "%7s  %3s  %9s  %7s", "—", "", "",
                    "");
      os << buf << '\n';
      continue;
    }
    char nbuf[40];
    std::snprintf(nbuf, sizeof(nbuf), "%zu/%zu", r.cell.n_a, r.cell.n_b);
    std::snprintf(buf, sizeof(buf), "%7.2f  %3c  %9.3g  %7s", r.cell.ratio,
                  r.cell.symbol, r.cell.p_value, nbuf);
    os << buf << '\n';
  }
  return os.str();
}

std::string emit_table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "problem,algorithm,scheme,ratio,symbol,p_value,n_a,n_b\n";
  for (const auto& r : rows) {
    os << r.problem << ',' << r.algorithm << ',' << r.scheme << ',';
    if (r.cell.not_run)
      os << ",-,,0,0\n";
    else
      os << fmt_double(r.cell.ratio) << ',' << r.cell.symbol << ','
         << fmt_double(r.cell.p_value) << ',' << r.cell.n_a << ','
         << r.cell.n_b << '\n';
  }
  return os.str();
}

std::vector<TableRow> parse_table_csv(const std::string& csv) {
  const auto lines = split(csv, '\n');
  if (lines.empty() ||
      trim(lines[0]) != "problem,algorithm,scheme,ratio,symbol,p_value,n_a,n_b")
    throw std::runtime_error("table csv: bad header");
  std::vector<TableRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 8) throw std::runtime_error("table csv: bad row: " + line);
    TableRow r;
    r.problem = f[0];
    r.algorithm = f[1];
    r.scheme = f[2];
    if (f[3].empty() && f[4] == "-") {
      r.cell = ComparisonCell::not_run_cell();
    } else {
      r.cell.not_run = false;
      r.cell.ratio = std::stod(f[3]);
      r.cell.symbol = f[4].empty() ? '=' : f[4][0];
      r.cell.p_value = std::stod(f[5]);
      r.cell.n_a = static_cast<std::size_t>(std::stoull(f[6]));
      r.cell.n_b = static_cast<std::size_t>(std::stoull(f[7]));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

struct ArmData {
  std::map<std::size_t, double> final_alpha;  // successful reps only
  std::size_t max_generations = 0;
  bool present = false;
};

ArmData load_arm(const fs::path& dir) {
  ArmData arm;
  if (!fs::is_directory(dir)) return arm;
  arm.present = true;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (name.rfind("rep", 0) == 0 && name.size() > 7 &&
        name.substr(name.size() - 4) == ".run")
      files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    const RunRecord rec = load_run_record(f.string());
    if (!rec.error.empty()) continue;
    arm.final_alpha[rec.repetition] = rec.final_alpha;
    arm.max_generations = std::max(arm.max_generations, rec.generations);
  }
  return arm;
}

// (problem, algorithm) directories under the experiment root, sorted
std::vector<std::pair<std::string, std::string>> scenario_list(
    const std::string& dir) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& pe : fs::directory_iterator(dir)) {
    if (!pe.is_directory()) continue;
    for (const auto& ae : fs::directory_iterator(pe.path())) {
      if (!ae.is_directory()) continue;
      out.emplace_back(pe.path().filename().string(),
                       ae.path().filename().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<TableRow> build_table(const std::string& dir,
                                  SeedingScheme scheme) {
  if (scheme == SeedingScheme::NoSeed)
    throw std::invalid_argument("build_table: compare a seeded scheme");
  std::vector<TableRow> rows;
  for (const auto& [problem, algorithm] : scenario_list(dir)) {
    const fs::path base = fs::path(dir) / problem / algorithm;
    const ArmData unseeded = load_arm(base / to_string(SeedingScheme::NoSeed));
    const ArmData seeded = load_arm(base / to_string(scheme));
    if (!unseeded.present || !seeded.present) continue;
    TableRow row;
    row.problem = problem;
    row.algorithm = algorithm;
    row.scheme = to_string(scheme);
    const bool runnable = !unseeded.final_alpha.empty() &&
                          !seeded.final_alpha.empty() &&
                          unseeded.max_generations > 0 &&
                          seeded.max_generations > 0;
    if (!runnable) {
      row.cell = ComparisonCell::not_run_cell();
    } else {
      std::vector<double> a, b;
      for (const auto& [rep, alpha] : unseeded.final_alpha) a.push_back(alpha);
      for (const auto& [rep, alpha] : seeded.final_alpha) b.push_back(alpha);
      row.cell = compare(a, b);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<PairedAlphas> collect_pairs(const std::string& dir,
                                        SeedingScheme scheme) {
  if (scheme == SeedingScheme::NoSeed)
    throw std::invalid_argument("collect_pairs: compare a seeded scheme");
  std::vector<PairedAlphas> pairs;
  for (const auto& [problem, algorithm] : scenario_list(dir)) {
    const fs::path base = fs::path(dir) / problem / algorithm;
    const ArmData unseeded = load_arm(base / to_string(SeedingScheme::NoSeed));
    const ArmData seeded = load_arm(base / to_string(scheme));
    if (!unseeded.present || !seeded.present) continue;
    std::set<std::size_t> ru, rs;
    for (const auto& [rep, alpha] : unseeded.final_alpha) ru.insert(rep);
    for (const auto& [rep, alpha] : seeded.final_alpha) rs.insert(rep);
    if (ru != rs)
      throw std::invalid_argument("collect_pairs: unmatched repetitions for " +
                                  problem + "/" + algorithm);
    for (std::size_t rep : ru)
      pairs.push_back(
          {unseeded.final_alpha.at(rep), seeded.final_alpha.at(rep)});
  }
  return pairs;
}

RankReport aggregate_rank_report(const std::vector<PairedAlphas>& pairs) {
  if (pairs.empty())
    throw std::domain_error("aggregate_rank_report: no matched pairs");
  RankReport rep;
  for (const auto& pr : pairs) {
    double ru, rs;
    if (pr.unseeded < pr.seeded) {
      ru = 1.0;
      rs = 2.0;
    } else if (pr.seeded < pr.unseeded) {
      ru = 2.0;
      rs = 1.0;
    } else {
      ru = rs = 1.5;
    }
    rep.unseeded_ranks.push_back(ru);
    rep.seeded_ranks.push_back(rs);
  }
  const double n = static_cast<double>(pairs.size());
  for (double r : rep.unseeded_ranks) rep.mean_unseeded += r / n;
  for (double r : rep.seeded_ranks) rep.mean_seeded += r / n;
  rep.p_value = ranksum_test(rep.unseeded_ranks, rep.seeded_ranks);
  if (rep.p_value < 0.05 && rep.mean_seeded < rep.mean_unseeded)
    rep.verdict = "seeding improves";
  else if (rep.p_value < 0.05 && rep.mean_seeded > rep.mean_unseeded)
    rep.verdict = "seeding worsens";
  else
    rep.verdict = "no significant difference";
  return rep;
}

}  // namespace moseed
