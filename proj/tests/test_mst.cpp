#include <doctest.h>

#include <random>

#include "edo/graph.hpp"
#include "edo/mst.hpp"
#include "oracles.hpp"

using namespace edo;

namespace {

GraphInstance corner_square() {
  return GraphInstance::euclidean({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// all 16 spanning trees of K4 by enumerating 3-subsets of the 6 edges
double brute_force_k4(const GraphInstance& g) {
  double best = 1e300;
  int trees = 0;
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 3) continue;
    std::vector<EdgeId> edges;
    for (int e = 0; e < 6; ++e) {
      if (mask & (1 << e)) edges.push_back(e);
    }
    oracle::UnionFind uf(4);
    bool acyclic = true;
    double c = 0.0;
    for (EdgeId e : edges) {
      const Edge uv = edge_of(e, 4);
      acyclic = acyclic && uf.unite(uv.u, uv.v);
      c += g.cost(e);
    }
    if (!acyclic) continue;
    ++trees;
    best = std::min(best, c);
  }
  REQUIRE(trees == 16);
  return best;
}

}  // namespace

TEST_CASE("MST of the unit complete graph costs n-1") {
  const auto [tree, opt] = minimum_spanning_tree(unit_complete(5));
  CHECK(opt == 4.0);
  CHECK(tree.edges().size() == 4);
  CHECK(tree_cost(tree, unit_complete(5)) == 4.0);
}

TEST_CASE("MST of the unit-square corners is three sides") {
  const GraphInstance g = corner_square();
  const auto [tree, opt] = minimum_spanning_tree(g);
  CHECK(brute_force_k4(g) == doctest::Approx(3.0));
  CHECK(opt == doctest::Approx(3.0));
  CHECK(tree_cost(tree, g) == doctest::Approx(3.0));
}

TEST_CASE("Prim agrees with an independent Kruskal on random instances") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Node n = static_cast<Node>(4 + seed % 9);
    const GraphInstance g = euclidean_instance(n, seed);
    const auto [tree, opt] = minimum_spanning_tree(g);
    REQUIRE(opt == doctest::Approx(oracle::kruskal_cost(g)).epsilon(1e-12));
    REQUIRE(static_cast<Node>(tree.edges().size()) == n - 1);
  }
}

TEST_CASE("MST is deterministic under ties") {
  const GraphInstance g = unit_complete(8);
  const auto a = minimum_spanning_tree(g);
  const auto b = minimum_spanning_tree(g);
  CHECK(a.tree == b.tree);
  // ties resolve to the lowest index edge: the star at node 0
  for (EdgeId e : a.tree.edges()) CHECK(g.edge(e).u == 0);
}

TEST_CASE("SpanningTree validation") {
  const GraphInstance g = unit_complete(5);
  CHECK_THROWS_AS(SpanningTree::from_edges(g, {}), std::domain_error);
  CHECK_THROWS_AS(SpanningTree::from_edges(g, {0, 1, 2}), std::domain_error);
  CHECK_THROWS_AS(SpanningTree::from_edges(g, {0, 0, 1, 2}), std::domain_error);
  CHECK_THROWS_AS(SpanningTree::from_edges(g, {0, 1, 2, 10}), std::domain_error);
  // triangle 0-1-2 plus edge 3-4: four edges but disconnected
  const std::vector<EdgeId> cyclic{edge_index(0, 1, 5), edge_index(1, 2, 5), edge_index(0, 2, 5), edge_index(3, 4, 5)};
  CHECK_THROWS_AS(SpanningTree::from_edges(g, cyclic), std::domain_error);

  const SpanningTree path = SpanningTree::from_edges(
      g, {edge_index(0, 1, 5), edge_index(1, 2, 5), edge_index(2, 3, 5), edge_index(3, 4, 5)});
  CHECK(path.cost() == 4.0);
  CHECK(path.degree(0) == 1);
  CHECK(path.degree(2) == 2);
  CHECK(path.contains(edge_index(2, 3, 5)));
  CHECK_FALSE(path.contains(edge_index(0, 4, 5)));
}

TEST_CASE("tree_cost errors") {
  const GraphInstance g = unit_complete(5);
  CHECK_THROWS_AS(tree_cost(std::span<const EdgeId>{}, g), std::domain_error);
  const std::vector<EdgeId> bad{0, 1, 2, 99};
  CHECK_THROWS_AS(tree_cost(bad, g), std::domain_error);
}

TEST_CASE("random trees over unit graphs cost n-1") {
  std::mt19937_64 rng(3);
  for (Node n : {4, 7, 20}) {
    const GraphInstance g = unit_complete(n);
    const SpanningTree t = oracle::random_tree(g, rng);
    CHECK(tree_cost(t, g) == n - 1);
  }
}
