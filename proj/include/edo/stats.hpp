#pragma once

#include <span>

namespace edo {

struct SampleSummary {
  std::size_t count;
  double mean;
  double std;  // sample standard deviation, divisor count - 1 (0 for count 1)
};

/// Throws std::domain_error on empty input.
SampleSummary summarize(std::span<const double> xs);

enum class Alternative { less, greater, two_sided };

struct RankSumTest {
  double u;        // U statistic of xs: rank sum of xs minus |xs|(|xs|+1)/2
  double p_value;
};

/// Wilcoxon-Mann-Whitney rank-sum test. Midranks for ties, normal
/// approximation with tie-corrected variance and continuity correction.
/// `less` tests whether xs tends to be smaller than ys.
RankSumTest mann_whitney_u(std::span<const double> xs, std::span<const double> ys, Alternative alternative);

/// Standard normal CDF.
double normal_cdf(double z);

}  // namespace edo
