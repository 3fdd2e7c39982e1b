#pragma once

#include <cstddef>
#include <vector>

namespace moseed {

// One seeded-vs-unseeded comparison. ">" means the seeded sample is
// significantly better (smaller alpha) at the 95% level, "<" significantly
// worse, "=" no significant difference. A NotRun cell stands in where a
// scenario produced no complete iteration and is rendered as a dash.
struct ComparisonCell {
  bool not_run = false;
  double ratio = 0.0;  // median(unseeded) / median(seeded)
  char symbol = '=';   // '>', '<', '=' (or '-' when not_run)
  double p_value = 1.0;
  std::size_t n_a = 0;  // unseeded sample size
  std::size_t n_b = 0;  // seeded sample size

  static ComparisonCell not_run_cell() {
    ComparisonCell c;
    c.not_run = true;
    c.symbol = '-';
    return c;
  }

  friend bool operator==(const ComparisonCell&,
                         const ComparisonCell&) = default;
};

// Middle element, or the midpoint of the middle two for even sizes.
double median(std::vector<double> values);

// Mann-Whitney U statistic of sample a against b, midranks for ties.
double mann_whitney_u(const std::vector<double>& a,
                      const std::vector<double>& b);

// Two-sided Wilcoxon-Mann-Whitney rank-sum p-value. Exact distribution when
// |a| + |b| <= 20 and the pooled sample is tie-free; otherwise the normal
// approximation with tie correction and continuity correction.
double ranksum_test(const std::vector<double>& a,
                    const std::vector<double>& b);

// Builds the table cell for one scenario from the two final-alpha samples.
ComparisonCell compare(const std::vector<double>& unseeded_alphas,
                       const std::vector<double>& seeded_alphas);

}  // namespace moseed
