#include <doctest.h>

#include <array>
#include <random>

#include "edo/construct.hpp"
#include "edo/diversity.hpp"
#include "edo/ea.hpp"
#include "edo/graph.hpp"
#include "oracles.hpp"

using namespace edo;

namespace {

EAConfig config(int mu, std::int64_t budget, std::uint64_t seed) {
  EAConfig cfg;
  cfg.mu = mu;
  cfg.budget = budget;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("EAConfig validation") {
  const GraphInstance g = unit_complete(6);
  CHECK_THROWS_AS(DiversityEA(g, config(0, 10, 1)), std::invalid_argument);
  CHECK_THROWS_AS(DiversityEA(g, config(2, 0, 1)), std::invalid_argument);
  EAConfig negative = config(2, 10, 1);
  negative.alpha = -0.1;
  CHECK_THROWS_AS(DiversityEA(g, negative), std::invalid_argument);
}

TEST_CASE("initialize uses MST clones") {
  const GraphInstance g = unit_complete(5);
  const Population p = initialize(g, config(2, 10, 1));
  REQUIRE(p.size() == 2);
  CHECK(p[0] == p[1]);
  CHECK(p.diversity() == 0);

  const GraphInstance e = euclidean_instance(20, 3);
  for (double alpha : {0.0, 0.05, 1.0}) {
    EAConfig cfg = config(4, 10, 1);
    cfg.alpha = alpha;
    DiversityEA ea(e, cfg);
    for (const auto& t : ea.population().trees()) CHECK(t.cost() <= ea.threshold());
  }
}

TEST_CASE("given population: star-pair plateau") {
  const GraphInstance g = unit_complete(6);
  DiversityEA ea(g, config(2, 100, 1), star_pair_plateau(g));
  CHECK(overlap(ea.population()[0], ea.population()[1]) == 1);
  CHECK(ea.population().diversity() == 8);

  CHECK_THROWS_AS(DiversityEA(g, config(3, 100, 1), star_pair_plateau(g)), std::invalid_argument);

  const GraphInstance e = euclidean_instance(6, 1);
  EAConfig tight = config(2, 100, 1);
  tight.alpha = 0.0;
  const auto stars = star_pair_plateau(e);
  if (stars[0].cost() > minimum_spanning_tree(e).opt || stars[1].cost() > minimum_spanning_tree(e).opt) {
    CHECK_THROWS_AS(DiversityEA(e, tight, stars), std::invalid_argument);
  }
}

TEST_CASE("least_contribution_survivor tie-breaking") {
  const GraphInstance g = unit_complete(6);
  const auto paths = path_decomposition(6).parts;
  const SpanningTree a = SpanningTree::from_edges(g, paths[0]);
  const SpanningTree b = SpanningTree::from_edges(g, paths[1]);
  const SpanningTree c = SpanningTree::from_edges(g, paths[2]);
  Rng rng(3);

  Population aab(g, {a, a, b});
  std::array<int, 3> hits{};
  for (int i = 0; i < 3000; ++i) ++hits[least_contribution_survivor(aab, rng)];
  CHECK(hits[2] == 0);
  CHECK(hits[0] > 1300);
  CHECK(hits[1] > 1300);

  Population abc(g, {a, b, c});
  hits = {};
  for (int i = 0; i < 3000; ++i) ++hits[least_contribution_survivor(abc, rng)];
  for (int h : hits) CHECK(h > 850);

  // three clones: the offspring slot is just as likely to go
  Population clones(g, {a, a, a});
  hits = {};
  for (int i = 0; i < 3000; ++i) ++hits[least_contribution_survivor(clones, rng)];
  for (int h : hits) CHECK(h > 850);
}

TEST_CASE("least_contribution_survivor attains the brute-force maximum") {
  const GraphInstance g = unit_complete(8);
  std::mt19937_64 tree_rng(31);
  Rng rng(31);
  for (int rep = 0; rep < 300; ++rep) {
    std::vector<SpanningTree> trees;
    for (int i = 0; i < 5; ++i) trees.push_back(oracle::random_tree(g, tree_rng));
    if (rep % 3 == 0) trees[4] = trees[1];
    Population pool(g, trees);
    std::int64_t best = -1;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      auto rest = trees;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      best = std::max(best, oracle::brute_diversity(rest, 8));
    }
    const std::size_t out = least_contribution_survivor(pool, rng);
    auto rest = trees;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(out));
    REQUIRE(oracle::brute_diversity(rest, 8) == best);
  }
}

TEST_CASE("an overlap-reducing offspring replaces its parent") {
  // A and B share k >= 2 edges; B' swaps one shared edge for an unused one
  const Node n = 8;
  const GraphInstance g = unit_complete(n);
  std::vector<EdgeId> a_edges, b_edges;
  for (Node v = 1; v < n; ++v) a_edges.push_back(g.index(0, v));  // star at 0
  for (Node v = 1; v < n; ++v) b_edges.push_back(v <= 3 ? g.index(0, v) : g.index(1, v));
  const SpanningTree a = SpanningTree::from_edges(g, a_edges);
  const SpanningTree b = SpanningTree::from_edges(g, b_edges);
  const int k = overlap(a, b);
  REQUIRE(k == 3);
  SpanningTree b2 = b;
  b2.exchange(g, g.index(2, 4), g.index(0, 2));
  REQUIRE(overlap(a, b2) == k - 1);

  Population pool(g, {a, b, b2});
  const Diversity before = Population(g, {a, b}).diversity();
  Rng rng(1);
  const std::size_t out = least_contribution_survivor(pool, rng);
  CHECK(out == 1);
  pool.remove(out);
  CHECK(pool.diversity() - before >= 2);
}

TEST_CASE("alpha = 0 rejects every offspring when the MST is unique") {
  const GraphInstance g = euclidean_instance(15, 5);
  EAConfig cfg = config(3, 200, 9);
  cfg.alpha = 0.0;
  cfg.stop_at_max = false;
  DiversityEA ea(g, cfg);
  const auto before = ea.population().trees();
  for (int i = 0; i < 200; ++i) {
    const StepResult r = ea.step();
    CHECK_FALSE(r.feasible);
  }
  CHECK(ea.population().trees() == before);
  CHECK(ea.evaluations() == 200);
}

TEST_CASE("mu = 1 is maximal at initialization") {
  const RunRecord rec = run(unit_complete(10), config(1, 100, 1));
  CHECK(rec.evaluations == 0);
  CHECK(rec.d_o_pct == 100.0);
  CHECK_FALSE(rec.hit_budget);
}

TEST_CASE("runs keep mu trees, respect the quality gate and never lose diversity") {
  const GraphInstance g = euclidean_instance(25, 8);
  for (double alpha : {0.1, 0.5}) {
    for (const auto& strategy : {MutationStrategy::uniform(1), MutationStrategy::poisson(1.0)}) {
      EAConfig cfg = config(5, 3000, 17);
      cfg.alpha = alpha;
      cfg.strategy = strategy;
      cfg.verify_invariants = true;
      cfg.record_trajectory = true;
      DiversityEA ea(g, cfg);
      Diversity last = ea.population().diversity();
      for (int i = 0; i < 1500; ++i) {
        ea.step();
        REQUIRE(ea.population().size() == 5);
        for (const auto& t : ea.population().trees()) REQUIRE(t.cost() <= ea.threshold());
        REQUIRE(ea.population().diversity() >= last);
        last = ea.population().diversity();
      }
      const RunRecord rec = ea.run();
      for (std::size_t i = 1; i < rec.trajectory.size(); ++i) {
        REQUIRE(rec.trajectory[i].diversity > rec.trajectory[i - 1].diversity);
        REQUIRE(rec.trajectory[i].evaluation > rec.trajectory[i - 1].evaluation);
      }
      CHECK(rec.evaluations == 3000);
      CHECK(rec.hit_budget);
      CHECK(rec.d_o_pct >= 0.0);
      CHECK(rec.d_o_pct <= 100.0);
    }
  }
}

TEST_CASE("unconstrained mu = 2 reaches maximum diversity") {
  const GraphInstance g = unit_complete(20);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EAConfig cfg = config(2, 2 * 20 * 20, seed);
    cfg.verify_invariants = true;
    const RunRecord rec = run(g, cfg);
    CHECK(rec.d_o_pct == 100.0);
    CHECK(rec.d_o_abs == 2 * 19);
    CHECK_FALSE(rec.hit_budget);
    CHECK(rec.evaluations <= cfg.budget);
  }
}

TEST_CASE("runs are deterministic in the seed") {
  const GraphInstance g = euclidean_instance(20, 2);
  EAConfig cfg = config(4, 2000, 99);
  cfg.alpha = 0.3;
  cfg.strategy = MutationStrategy::poisson(1.0);
  cfg.record_trajectory = true;
  const RunRecord a = run(g, cfg);
  const RunRecord b = run(g, cfg);
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.d_o_abs == b.d_o_abs);
  CHECK(a.maxdeg_div_pct == b.maxdeg_div_pct);
  REQUIRE(a.trajectory.size() == b.trajectory.size());
  for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
    CHECK(a.trajectory[i].evaluation == b.trajectory[i].evaluation);
    CHECK(a.trajectory[i].diversity == b.trajectory[i].diversity);
  }
  cfg.seed = 100;
  CHECK(run(g, cfg).trajectory.size() > 1);
}
