#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "edo/diversity.hpp"
#include "edo/graph.hpp"
#include "edo/mst.hpp"
#include "edo/mutation.hpp"

namespace edo {

enum class InitMode { clones_of_mst, given_population };

struct EAConfig {
  int mu = 2;
  /// Quality slack: offspring must satisfy c(T) <= (1 + alpha) * OPT.
  double alpha = std::numeric_limits<double>::infinity();
  MutationStrategy strategy = MutationStrategy::uniform(1);
  std::int64_t budget = 1;
  std::uint64_t seed = 0;
  InitMode init = InitMode::clones_of_mst;
  /// Stop as soon as D_o reaches mu(mu-1)(n-1).
  bool stop_at_max = true;
  bool record_trajectory = false;
  /// Recompute population bookkeeping from scratch after every step.
  bool verify_invariants = false;

  /// Throws std::invalid_argument unless mu >= 1, budget >= 1, alpha >= 0.
  void validate() const;
};

struct TrajectoryPoint {
  std::int64_t evaluation;
  Diversity diversity;
};

struct RunRecord {
  std::int64_t evaluations = 0;
  bool hit_budget = false;
  Diversity d_o_abs = 0;
  double d_o_pct = 0.0;
  double maxdeg_div_pct = 0.0;
  double leaf_div_pct = 0.0;
  double diam_div_pct = 0.0;
  /// (evaluation, D_o) at start and after every change of D_o.
  std::vector<TrajectoryPoint> trajectory;
};

struct StepResult {
  bool feasible;           // offspring passed the quality gate
  bool offspring_survived; // offspring is in the population afterwards
};

/// Index whose removal leaves the largest remaining D_o, i.e. the
/// individual with the least contribution. Ties are broken uniformly at
/// random among all maximizers.
std::size_t least_contribution_survivor(const Population& pool, Rng& rng);

/// Diversity-maximising (mu+1)-EA over spanning trees of a complete graph.
class DiversityEA {
 public:
  /// Population of mu MST clones.
  DiversityEA(const GraphInstance& g, EAConfig cfg);
  /// Given initial population; every tree must pass the quality gate and
  /// there must be exactly mu of them (std::invalid_argument otherwise).
  DiversityEA(const GraphInstance& g, EAConfig cfg, std::vector<SpanningTree> initial);

  StepResult step();
  RunRecord run();

  const Population& population() const { return population_; }
  std::int64_t evaluations() const { return evaluations_; }
  double opt() const { return opt_; }
  double threshold() const { return threshold_; }
  const EAConfig& config() const { return cfg_; }

 private:
  bool at_max() const { return population_.diversity() == population_.max_diversity(); }

  const GraphInstance* graph_;
  EAConfig cfg_;
  Rng rng_;
  double opt_;
  double threshold_;
  Population population_;
  std::int64_t evaluations_ = 0;
};

/// mu MST clones (InitMode::clones_of_mst).
Population initialize(const GraphInstance& g, const EAConfig& cfg);

RunRecord run(const GraphInstance& g, const EAConfig& cfg);

}  // namespace edo
