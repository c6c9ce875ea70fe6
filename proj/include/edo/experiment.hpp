#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edo/ea.hpp"
#include "edo/graph.hpp"
#include "edo/mutation.hpp"
#include "edo/stats.hpp"

namespace edo {

/// Malformed scenario input; key() names the offending key.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string key, const std::string& message)
      : std::runtime_error("scenario key '" + key + "': " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct Scenario {
  std::string id = "scenario";
  CostKind instance = CostKind::unit;
  Node n = 0;
  std::uint64_t instance_seed = 1;
  /// Fresh Euclidean instance per replication instead of one shared one.
  bool instance_per_replication = false;
  std::vector<int> mus;
  std::vector<double> alphas{std::numeric_limits<double>::infinity()};
  std::vector<MutationStrategy> strategies{MutationStrategy::uniform(1)};
  int replications = 30;
  /// budget = budget_factor * mu * n^2 unless `budget` is set.
  double budget_factor = 1.0;
  std::optional<std::int64_t> budget;
  std::uint64_t base_seed = 1;
  /// Defaults to true on unit instances and false on Euclidean ones.
  std::optional<bool> stop_at_max;
  bool allow_large_mu = false;

  /// Throws ScenarioError for out-of-range values or an empty grid.
  void validate() const;
  std::int64_t budget_for(int mu) const;
  bool stops_at_max() const { return stop_at_max.value_or(instance == CostKind::unit); }
  std::size_t cell_count() const { return mus.size() * alphas.size() * strategies.size(); }
};

/// Flat `key = value` lines, lists comma-separated, `#` starts a comment.
/// Keys: id, instance, n, instance_seed, instance_per_replication, mu,
/// alpha, strategies, replications, budget_factor, budget, base_seed,
/// stop_at_max, allow_large_mu.
Scenario parse_scenario(std::istream& in);

/// Per-run seed from (base seed, cell index, replication index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t cell, std::uint64_t replication);

struct RunRow {
  std::string scenario_id;
  Node n;
  EdgeId m;
  int mu;
  double alpha;
  std::string strategy;
  std::uint64_t seed;
  int replication;
  RunRecord record;
};

struct AggregateRow {
  std::string scenario_id;
  Node n;
  int mu;
  double alpha;
  std::string strategy;
  int runs;
  int hit_budget_runs;
  SampleSummary evaluations;
  SampleSummary d_o_pct;
  SampleSummary maxdeg_div_pct;
  SampleSummary leaf_div_pct;
  SampleSummary diam_div_pct;
  /// Strategies this one beats significantly on the primary metric.
  std::vector<std::string> better_than;
};

struct ComparisonRow {
  std::string scenario_id;
  Node n;
  int mu;
  double alpha;
  std::string metric;  // "evaluations" (lower is better) or "d_o_pct" (higher)
  std::string strategy;
  std::string competitor;
  RankSumTest test;
  bool significant;
};

struct ExperimentResult {
  std::vector<RunRow> runs;  // sorted by (cell, replication)
  std::vector<AggregateRow> aggregates;
  std::vector<ComparisonRow> comparisons;
};

inline constexpr double kSignificanceLevel = 0.05;

/// Runs every (mu, alpha, strategy) cell for all replications on up to
/// `threads` worker threads. Output is independent of the thread count.
ExperimentResult run_experiment(const Scenario& s, unsigned threads = 1);

/// Aggregates and pairwise rank-sum comparisons from per-run rows.
void summarize_runs(const Scenario& s, ExperimentResult& result);

/// Shortest round-trip decimal, always with a fractional part or "inf".
std::string format_number(double x);

void write_runs_csv(std::ostream& out, const std::vector<RunRow>& rows);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);
void write_comparisons_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);

extern const char* const kRunsCsvHeader;

}  // namespace edo
