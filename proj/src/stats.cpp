#include "moseed/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moseed {

double median(std::vector<double> values) {
  if (values.empty()) throw std::domain_error("median: empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

namespace {

struct RankInfo {
  double rank_sum_a = 0.0;  // midrank sum of sample a
  bool has_ties = false;
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
};

RankInfo pooled_ranks(const std::vector<double>& a,
                      const std::vector<double>& b) {
  std::vector<std::pair<double, bool>> pooled;  // value, is_from_a
  pooled.reserve(a.size() + b.size());
  for (double v : a) pooled.emplace_back(v, true);
  for (double v : b) pooled.emplace_back(v, false);
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  RankInfo info;
  std::size_t i = 0;
  while (i < pooled.size()) {
    std::size_t j = i;
    while (j < pooled.size() && pooled[j].first == pooled[i].first) ++j;
    const double t = static_cast<double>(j - i);
    // ranks are 1-based; the group spanning positions [i, j) shares midrank
    const double midrank = 0.5 * (static_cast<double>(i + 1) +
                                  static_cast<double>(j));
    for (std::size_t k = i; k < j; ++k)
      if (pooled[k].second) info.rank_sum_a += midrank;
    if (t > 1.0) {
      info.has_ties = true;
      info.tie_term += t * t * t - t;
    }
    i = j;
  }
  return info;
}

// P(U <= u_stat) under the exact null distribution for sample sizes m, n.
// table[i][u] counts arrangements of i a's and j b's with U = u, built up in
// j via c_{i,j}(u) = c_{i-1,j}(u - j) + c_{i,j-1}(u): the largest pooled
// element is either an a (beating all j b's) or a b.
double exact_cdf(std::size_t m, std::size_t n, double u_stat) {
  const std::size_t umax = m * n;
  std::vector<std::vector<double>> table(
      m + 1, std::vector<double>(umax + 1, 0.0));
  for (std::size_t i = 0; i <= m; ++i) table[i][0] = 1.0;  // j = 0
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<std::vector<double>> next(
        m + 1, std::vector<double>(umax + 1, 0.0));
    next[0][0] = 1.0;
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t u = 0; u <= umax; ++u) {
        double c = table[i][u];
        if (u >= j) c += next[i - 1][u - j];
        next[i][u] = c;
      }
    table = std::move(next);
  }
  double total = 0.0, tail = 0.0;
  for (std::size_t u = 0; u <= umax; ++u) {
    total += table[m][u];
    if (static_cast<double>(u) <= u_stat + 1e-9) tail += table[m][u];
  }
  return tail / total;
}

}  // namespace

double mann_whitney_u(const std::vector<double>& a,
                      const std::vector<double>& b) {
  if (a.empty() || b.empty())
    throw std::domain_error("mann_whitney_u: empty sample");
  const auto info = pooled_ranks(a, b);
  const double n1 = static_cast<double>(a.size());
  return info.rank_sum_a - n1 * (n1 + 1.0) / 2.0;
}

double ranksum_test(const std::vector<double>& a,
                    const std::vector<double>& b) {
  if (a.empty() || b.empty())
    throw std::domain_error("ranksum_test: empty sample");
  const auto info = pooled_ranks(a, b);
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double u1 = info.rank_sum_a - n1 * (n1 + 1.0) / 2.0;
  const double u2 = n1 * n2 - u1;
  const double umin = std::min(u1, u2);

  if (a.size() + b.size() <= 20 && !info.has_ties) {
    const double p = 2.0 * exact_cdf(a.size(), b.size(), umin);
    return std::min(1.0, p);
  }

  const double n = n1 + n2;
  const double mean = n1 * n2 / 2.0;
  const double var =
      n1 * n2 / 12.0 * ((n + 1.0) - info.tie_term / (n * (n - 1.0)));
  if (var <= 0.0) return 1.0;  // fully tied pool carries no information
  const double z = std::max(0.0, std::fabs(u1 - mean) - 0.5) / std::sqrt(var);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

ComparisonCell compare(const std::vector<double>& unseeded_alphas,
                       const std::vector<double>& seeded_alphas) {
  if (unseeded_alphas.empty() || seeded_alphas.empty())
    throw std::domain_error("compare: empty sample");
  ComparisonCell cell;
  cell.n_a = unseeded_alphas.size();
  cell.n_b = seeded_alphas.size();
  cell.p_value = ranksum_test(unseeded_alphas, seeded_alphas);
  const double med_u = median(unseeded_alphas);
  const double med_s = median(seeded_alphas);
  if (med_s == 0.0)
    cell.ratio = med_u == 0.0 ? 1.0
                              : std::numeric_limits<double>::infinity();
  else
    cell.ratio = med_u / med_s;
  if (cell.p_value < 0.05 && med_s < med_u)
    cell.symbol = '>';
  else if (cell.p_value < 0.05 && med_s > med_u)
    cell.symbol = '<';
  else
    cell.symbol = '=';
  return cell;
}

}  // namespace moseed
