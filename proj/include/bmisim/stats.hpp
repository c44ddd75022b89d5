#pragma once

#include <span>
#include <vector>

namespace bmisim {

struct RankSumResult {
  double u_statistic = 0.0;    // U of the first sample
  double p_two_sided = 1.0;
  double p_one_sided_less = 1.0;  // P(U_first <= observed)
  bool exact = false;
};

/// Mann-Whitney U with midrank ties. Exact p by enumeration when both
/// samples have at most 8 observations, otherwise a continuity-corrected
/// normal approximation with tie-corrected variance. Identical samples
/// (zero variance) report p = 1.
RankSumResult rank_sum_test(std::span<const double> xs,
                            std::span<const double> ys);

/// Median of a sample (averaged middle pair for even sizes).
double median(std::vector<double> values);

/// Linear-interpolation quantile of a sample, q in [0, 1].
double quantile(std::vector<double> values, double q);

}  // namespace bmisim
