#include "edo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace edo {

SampleSummary summarize(std::span<const double> xs) {
  if (xs.empty()) throw std::domain_error("summary of an empty sample");
  const double n = static_cast<double>(xs.size());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = xs.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  return SampleSummary{xs.size(), mean, sd};
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

RankSumTest mann_whitney_u(std::span<const double> xs, std::span<const double> ys, Alternative alternative) {
  if (xs.empty() || ys.empty()) throw std::domain_error("rank-sum test needs two non-empty samples");
  const double nx = static_cast<double>(xs.size());
  const double ny = static_cast<double>(ys.size());
  const double total = nx + ny;

  // (value, from xs)
  std::vector<std::pair<double, bool>> pooled;
  pooled.reserve(xs.size() + ys.size());
  for (double x : xs) pooled.emplace_back(x, true);
  for (double y : ys) pooled.emplace_back(y, false);
  std::sort(pooled.begin(), pooled.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  double rank_sum_x = 0.0;
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
  for (std::size_t i = 0; i < pooled.size();) {
    std::size_t j = i;
    while (j < pooled.size() && pooled[j].first == pooled[i].first) ++j;
    const double midrank = 0.5 * static_cast<double>(i + 1 + j);
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    for (std::size_t k = i; k < j; ++k) {
      if (pooled[k].second) rank_sum_x += midrank;
    }
    i = j;
  }

  const double u = rank_sum_x - nx * (nx + 1.0) / 2.0;
  const double mean_u = nx * ny / 2.0;
  const double var_u = nx * ny / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
  if (!(var_u > 0.0)) return RankSumTest{u, 1.0};
  const double sd = std::sqrt(var_u);

  double p = 1.0;
  switch (alternative) {
    case Alternative::less:
      p = normal_cdf((u - mean_u + 0.5) / sd);
      break;
    case Alternative::greater:
      p = 1.0 - normal_cdf((u - mean_u - 0.5) / sd);
      break;
    case Alternative::two_sided: {
      const double d = u - mean_u;
      const double z = (d == 0.0 ? 0.0 : d - std::copysign(0.5, d)) / sd;
      p = 2.0 * std::min(normal_cdf(z), 1.0 - normal_cdf(z));
      break;
    }
  }
  return RankSumTest{u, std::clamp(p, 0.0, 1.0)};
}

}  // namespace edo
