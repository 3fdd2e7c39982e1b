#include "moseed/problems.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

namespace moseed {

namespace {

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------- ZDT family

ObjectiveVector zdt1_eval(const DecisionVector& x) {
  const std::size_t n = x.size();
  double s = 0.0;
  for (std::size_t i = 1; i < n; ++i) s += x[i];
  const double g = 1.0 + 9.0 * s / static_cast<double>(n - 1);
  const double f1 = x[0];
  return {f1, g * (1.0 - std::sqrt(f1 / g))};
}

ObjectiveVector zdt2_eval(const DecisionVector& x) {
  const std::size_t n = x.size();
  double s = 0.0;
  for (std::size_t i = 1; i < n; ++i) s += x[i];
  const double g = 1.0 + 9.0 * s / static_cast<double>(n - 1);
  const double f1 = x[0];
  const double r = f1 / g;
  return {f1, g * (1.0 - r * r)};
}

double zdt3_curve(double f1) {
  return 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * kPi * f1);
}

ObjectiveVector zdt3_eval(const DecisionVector& x) {
  const std::size_t n = x.size();
  double s = 0.0;
  for (std::size_t i = 1; i < n; ++i) s += x[i];
  const double g = 1.0 + 9.0 * s / static_cast<double>(n - 1);
  const double f1 = x[0];
  const double r = f1 / g;
  return {f1, g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * kPi * f1))};
}

ObjectiveVector zdt4_eval(const DecisionVector& x) {
  const std::size_t n = x.size();
  double g = 1.0 + 10.0 * static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    g += x[i] * x[i] - 10.0 * std::cos(4.0 * kPi * x[i]);
  const double f1 = x[0];
  return {f1, g * (1.0 - std::sqrt(f1 / g))};
}

ObjectiveVector zdt6_eval(const DecisionVector& x) {
  const std::size_t n = x.size();
  const double sx = std::sin(6.0 * kPi * x[0]);
  const double f1 = 1.0 - std::exp(-4.0 * x[0]) * std::pow(sx, 6.0);
  double s = 0.0;
  for (std::size_t i = 1; i < n; ++i) s += x[i];
  const double g =
      1.0 + 9.0 * std::pow(s / static_cast<double>(n - 1), 0.25);
  const double r = f1 / g;
  return {f1, g * (1.0 - r * r)};
}

// Smallest attainable f1 on the ZDT6 front (image of the f1 map at g = 1).
double zdt6_f1_min() {
  static const double value = [] {
    auto h = [](double t) {
      const double sx = std::sin(6.0 * kPi * t);
      return 1.0 - std::exp(-4.0 * t) * std::pow(sx, 6.0);
    };
    // dense scan, then ternary refinement around the best grid point
    const int grid = 200000;
    double best_t = 0.0, best = h(0.0);
    for (int i = 1; i <= grid; ++i) {
      const double t = static_cast<double>(i) / grid;
      const double v = h(t);
      if (v < best) {
        best = v;
        best_t = t;
      }
    }
    double lo = std::max(0.0, best_t - 1.0 / grid);
    double hi = std::min(1.0, best_t + 1.0 / grid);
    for (int it = 0; it < 200; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (h(m1) < h(m2))
        hi = m2;
      else
        lo = m1;
    }
    return h(0.5 * (lo + hi));
  }();
  return value;
}

// Non-dominated part of the ZDT3 curve: filter a dense 1e6-point sample of
// (f1, 1 - sqrt(f1) - f1 sin(10 pi f1)) with a running minimum on f2.
const std::vector<std::pair<double, double>>& zdt3_front_points() {
  static const std::vector<std::pair<double, double>> pts = [] {
    const std::size_t grid = 1000000;
    std::vector<std::pair<double, double>> kept;
    kept.reserve(grid / 3);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(grid - 1);
      const double y = zdt3_curve(t);
      if (y < best) {
        best = y;
        kept.emplace_back(t, y);
      }
    }
    return kept;
  }();
  return pts;
}

std::vector<ObjectiveVector> front_convex(std::size_t count, Rng& rng) {
  // f2 = 1 - sqrt(f1), f1 uniform in [0, 1]  (ZDT1, ZDT4, LZ09)
  std::vector<ObjectiveVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = rng.uniform();
    out.push_back({t, 1.0 - std::sqrt(t)});
  }
  return out;
}

std::vector<ObjectiveVector> front_concave(std::size_t count, Rng& rng) {
  // f2 = 1 - f1^2, f1 uniform in [0, 1]  (ZDT2)
  std::vector<ObjectiveVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = rng.uniform();
    out.push_back({t, 1.0 - t * t});
  }
  return out;
}

std::vector<ObjectiveVector> front_zdt3(std::size_t count, Rng& rng) {
  const auto& pts = zdt3_front_points();
  std::vector<ObjectiveVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& p = pts[rng.index(pts.size())];
    out.push_back({p.first, p.second});
  }
  return out;
}

std::vector<ObjectiveVector> front_zdt6(std::size_t count, Rng& rng) {
  const double f1min = zdt6_f1_min();
  std::vector<ObjectiveVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = rng.uniform(f1min, 1.0);
    out.push_back({t, 1.0 - t * t});
  }
  return out;
}

// --------------------------------------------------------------- DTLZ family

double dtlz_g_rastrigin(const DecisionVector& x, std::size_t d) {
  // DTLZ1/DTLZ3 distance function over the last k = n - d + 1 variables
  const std::size_t n = x.size();
  double g = 0.0;
  for (std::size_t i = d - 1; i < n; ++i) {
    const double z = x[i] - 0.5;
    g += z * z - std::cos(20.0 * kPi * z);
  }
  const double k = static_cast<double>(n - d + 1);
  return 100.0 * (k + g);
}

double dtlz_g_sphere(const DecisionVector& x, std::size_t d) {
  const std::size_t n = x.size();
  double g = 0.0;
  for (std::size_t i = d - 1; i < n; ++i) {
    const double z = x[i] - 0.5;
    g += z * z;
  }
  return g;
}

ObjectiveVector dtlz1_eval(const DecisionVector& x, std::size_t d) {
  const double g = dtlz_g_rastrigin(x, d);
  ObjectiveVector f(d);
  for (std::size_t i = 0; i < d; ++i) {
    double v = 0.5 * (1.0 + g);
    for (std::size_t j = 0; j + i + 1 < d; ++j) v *= x[j];
    if (i > 0) v *= 1.0 - x[d - 1 - i];
    f[i] = v;
  }
  return f;
}

ObjectiveVector dtlz2_shape(const DecisionVector& x, std::size_t d, double g,
                            double alpha) {
  ObjectiveVector f(d);
  for (std::size_t i = 0; i < d; ++i) {
    double v = 1.0 + g;
    for (std::size_t j = 0; j + i + 1 < d; ++j)
      v *= std::cos(std::pow(x[j], alpha) * kPi / 2.0);
    if (i > 0) v *= std::sin(std::pow(x[d - 1 - i], alpha) * kPi / 2.0);
    f[i] = v;
  }
  return f;
}

std::vector<ObjectiveVector> front_simplex(std::size_t count, std::size_t d,
                                           Rng& rng) {
  // uniform on { f >= 0 : sum f = 0.5 }  (DTLZ1)
  std::vector<ObjectiveVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    ObjectiveVector f(d);
    double s = 0.0;
    do {
      s = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        f[j] = -std::log(1.0 - rng.uniform());
        s += f[j];
      }
    } while (!(s > 0.0));
    for (std::size_t j = 0; j < d; ++j) f[j] = 0.5 * f[j] / s;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<ObjectiveVector> front_sphere(std::size_t count, std::size_t d,
                                          Rng& rng) {
  // uniform on the unit sphere restricted to the non-negative orthant
  std::vector<ObjectiveVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    ObjectiveVector f(d);
    double norm = 0.0;
    do {
      norm = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        f[j] = std::fabs(rng.normal());
        norm += f[j] * f[j];
      }
    } while (!(norm > 0.0));
    norm = std::sqrt(norm);
    for (std::size_t j = 0; j < d; ++j) f[j] /= norm;
    out.push_back(std::move(f));
  }
  return out;
}

// ----------------------------------------------------------------- LZ09 F1/2

ObjectiveVector lz09_eval(const DecisionVector& x, bool f2_variant) {
  const std::size_t n = x.size();
  double s_odd = 0.0, s_even = 0.0;
  std::size_t n_odd = 0, n_even = 0;
  for (std::size_t j = 2; j <= n; ++j) {  // 1-based variable index
    double target;
    if (f2_variant) {
      target = std::sin(6.0 * kPi * x[0] +
                        static_cast<double>(j) * kPi / static_cast<double>(n));
    } else {
      const double e =
          0.5 * (1.0 + 3.0 * static_cast<double>(j - 2) /
                           static_cast<double>(n - 2));
      target = std::pow(x[0], e);
    }
    const double beta = x[j - 1] - target;
    if (j % 2 == 1) {
      s_odd += beta * beta;
      ++n_odd;
    } else {
      s_even += beta * beta;
      ++n_even;
    }
  }
  const double f1 = x[0] + 2.0 * s_odd / static_cast<double>(n_odd);
  const double f2 =
      1.0 - std::sqrt(x[0]) + 2.0 * s_even / static_cast<double>(n_even);
  return {f1, f2};
}

// ------------------------------------------------------------------ registry

ProblemInstance make_zdt(const std::string& name, std::size_t n,
                         ObjectiveVector (*eval)(const DecisionVector&),
                         std::vector<ObjectiveVector> (*front)(std::size_t,
                                                               Rng&),
                         Bounds bounds) {
  ProblemInstance p;
  p.name = name;
  p.n = n;
  p.d = 2;
  p.bounds = std::move(bounds);
  p.evaluator = eval;
  p.front_sampler = front;
  return p;
}

ProblemInstance make_dtlz(int id, std::size_t d) {
  const std::size_t n = 30;
  ProblemInstance p;
  p.name = "dtlz" + std::to_string(id) + "_d" + std::to_string(d);
  p.n = n;
  p.d = d;
  p.bounds = Bounds::uniform(n, 0.0, 1.0);
  switch (id) {
    case 1:
      p.evaluator = [d](const DecisionVector& x) { return dtlz1_eval(x, d); };
      p.front_sampler = [d](std::size_t c, Rng& r) {
        return front_simplex(c, d, r);
      };
      break;
    case 2:
      p.evaluator = [d](const DecisionVector& x) {
        return dtlz2_shape(x, d, dtlz_g_sphere(x, d), 1.0);
      };
      p.front_sampler = [d](std::size_t c, Rng& r) {
        return front_sphere(c, d, r);
      };
      break;
    case 3:
      p.evaluator = [d](const DecisionVector& x) {
        return dtlz2_shape(x, d, dtlz_g_rastrigin(x, d), 1.0);
      };
      p.front_sampler = [d](std::size_t c, Rng& r) {
        return front_sphere(c, d, r);
      };
      break;
    case 4:
      p.evaluator = [d](const DecisionVector& x) {
        return dtlz2_shape(x, d, dtlz_g_sphere(x, d), 100.0);
      };
      p.front_sampler = [d](std::size_t c, Rng& r) {
        return front_sphere(c, d, r);
      };
      break;
    default:
      throw std::invalid_argument("make_dtlz: unknown id");
  }
  return p;
}

ProblemInstance make_lz09(int id) {
  const std::size_t n = 30;
  ProblemInstance p;
  p.name = "lz09_f" + std::to_string(id);
  p.n = n;
  p.d = 2;
  if (id == 1) {
    p.bounds = Bounds::uniform(n, 0.0, 1.0);
    p.evaluator = [](const DecisionVector& x) { return lz09_eval(x, false); };
  } else {
    std::vector<double> lo(n, -1.0), hi(n, 1.0);
    lo[0] = 0.0;
    p.bounds = Bounds(std::move(lo), std::move(hi));
    p.evaluator = [](const DecisionVector& x) { return lz09_eval(x, true); };
  }
  p.front_sampler = front_convex;
  return p;
}

const std::map<std::string, ProblemInstance>& registry() {
  static const std::map<std::string, ProblemInstance> reg = [] {
    std::map<std::string, ProblemInstance> m;
    auto add = [&m](ProblemInstance p) { m.emplace(p.name, std::move(p)); };
    add(make_zdt("zdt1", 30, zdt1_eval, front_convex,
                 Bounds::uniform(30, 0.0, 1.0)));
    add(make_zdt("zdt2", 30, zdt2_eval, front_concave,
                 Bounds::uniform(30, 0.0, 1.0)));
    add(make_zdt("zdt3", 30, zdt3_eval, front_zdt3,
                 Bounds::uniform(30, 0.0, 1.0)));
    {
      std::vector<double> lo(10, -5.0), hi(10, 5.0);
      lo[0] = 0.0;
      hi[0] = 1.0;
      add(make_zdt("zdt4", 10, zdt4_eval, front_convex,
                   Bounds(std::move(lo), std::move(hi))));
    }
    add(make_zdt("zdt6", 10, zdt6_eval, front_zdt6,
                 Bounds::uniform(10, 0.0, 1.0)));
    for (int id = 1; id <= 4; ++id)
      for (std::size_t d : {2u, 4u, 6u, 8u}) add(make_dtlz(id, d));
    add(make_lz09(1));
    add(make_lz09(2));
    return m;
  }();
  return reg;
}

}  // namespace

ObjectiveVector evaluate(const ProblemInstance& p, const DecisionVector& x) {
  if (x.size() != p.n)
    throw std::domain_error("evaluate: wrong number of variables for " +
                            p.name);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < p.bounds.lower[i] || x[i] > p.bounds.upper[i])
      throw std::domain_error("evaluate: variable " + std::to_string(i) +
                              " out of bounds for " + p.name);
  return p.evaluator(x);
}

std::vector<ObjectiveVector> front_sample(const ProblemInstance& p,
                                          std::size_t count, Rng& rng) {
  if (count == 0)
    throw std::invalid_argument("front_sample: count must be positive");
  return p.front_sampler(count, rng);
}

const ProblemInstance& find_problem(const std::string& name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end())
    throw std::invalid_argument("unknown problem: " + name);
  return it->second;
}

std::vector<std::string> problem_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

void write_objectives_csv(std::ostream& os,
                          const std::vector<ObjectiveVector>& points) {
  char buf[64];
  for (const auto& f : points) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", f[i]);
      if (i) os << ',';
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace moseed
