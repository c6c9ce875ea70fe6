#include "edo/ea.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace edo {

void EAConfig::validate() const {
  if (mu < 1) throw std::invalid_argument(fmt::format("mu must be >= 1, got {}", mu));
  if (budget < 1) throw std::invalid_argument(fmt::format("budget must be >= 1, got {}", budget));
  if (!(alpha >= 0.0)) throw std::invalid_argument(fmt::format("alpha must be >= 0, got {}", alpha));
}

std::size_t least_contribution_survivor(const Population& pool, Rng& rng) {
  Diversity best = std::numeric_limits<Diversity>::min();
  std::size_t chosen = 0;
  std::size_t ties = 0;
  // reservoir sampling over the maximizers
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Diversity d = pool.diversity_after_removal(i);
    if (d > best) {
      best = d;
      chosen = i;
      ties = 1;
    } else if (d == best) {
      ++ties;
      if (std::uniform_int_distribution<std::size_t>(0, ties - 1)(rng) == 0) chosen = i;
    }
  }
  return chosen;
}

namespace {

double quality_threshold(double opt, double alpha) {
  if (std::isinf(alpha)) return std::numeric_limits<double>::infinity();
  return (1.0 + alpha) * opt;
}

}  // namespace

Population initialize(const GraphInstance& g, const EAConfig& cfg) {
  cfg.validate();
  const MstResult mst = minimum_spanning_tree(g);
  Population p(g);
  for (int i = 0; i < cfg.mu; ++i) p.add(mst.tree);
  return p;
}

DiversityEA::DiversityEA(const GraphInstance& g, EAConfig cfg)
    : graph_(&g), cfg_(cfg), rng_(cfg.seed), opt_(0.0), threshold_(0.0), population_(g) {
  cfg_.validate();
  cfg_.init = InitMode::clones_of_mst;
  const MstResult mst = minimum_spanning_tree(g);
  opt_ = mst.opt;
  threshold_ = quality_threshold(opt_, cfg_.alpha);
  for (int i = 0; i < cfg_.mu; ++i) population_.add(mst.tree);
}

DiversityEA::DiversityEA(const GraphInstance& g, EAConfig cfg, std::vector<SpanningTree> initial)
    : graph_(&g),
      cfg_(cfg),
      rng_(cfg.seed),
      opt_(minimum_spanning_tree(g).opt),
      threshold_(quality_threshold(opt_, cfg.alpha)),
      population_(g) {
  cfg_.validate();
  cfg_.init = InitMode::given_population;
  if (static_cast<int>(initial.size()) != cfg_.mu) {
    throw std::invalid_argument(fmt::format("initial population has {} trees, mu = {}", initial.size(), cfg_.mu));
  }
  for (auto& t : initial) {
    if (t.cost() > threshold_) throw std::invalid_argument("initial tree violates the quality threshold");
    population_.add(std::move(t));
  }
}

StepResult DiversityEA::step() {
  ++evaluations_;
  const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, population_.size() - 1)(rng_);
  SpanningTree child = mutate(population_[parent], *graph_, cfg_.strategy, rng_);
  if (child.cost() > threshold_) return StepResult{false, false};

  population_.add(std::move(child));
  const std::size_t out = least_contribution_survivor(population_, rng_);
  const bool survived = out != population_.size() - 1;
  population_.remove(out);
  if (cfg_.verify_invariants) population_.check_invariants();
  return StepResult{true, survived};
}

RunRecord DiversityEA::run() {
  RunRecord rec;
  Diversity last = population_.diversity();
  if (cfg_.record_trajectory) rec.trajectory.push_back({evaluations_, last});

  bool reached = cfg_.stop_at_max && at_max();
  while (!reached && evaluations_ < cfg_.budget) {
    step();
    const Diversity d = population_.diversity();
    if (d != last) {
      last = d;
      if (cfg_.record_trajectory) rec.trajectory.push_back({evaluations_, d});
    }
    reached = cfg_.stop_at_max && at_max();
  }

  rec.evaluations = evaluations_;
  rec.hit_budget = !reached && evaluations_ >= cfg_.budget;
  rec.d_o_abs = population_.diversity();
  rec.d_o_pct = population_.diversity_pct();
  rec.maxdeg_div_pct = feature_diversity(population_, Feature::max_degree);
  rec.leaf_div_pct = feature_diversity(population_, Feature::leaf_count);
  rec.diam_div_pct = feature_diversity(population_, Feature::diameter);
  return rec;
}

RunRecord run(const GraphInstance& g, const EAConfig& cfg) {
  DiversityEA ea(g, cfg);
  return ea.run();
}

}  // namespace edo
