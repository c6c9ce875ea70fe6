#include <doctest.h>

#include <cmath>
#include <sstream>

#include "edo/graph.hpp"

using namespace edo;

TEST_CASE("edge_index uses lexicographic order") {
  CHECK(edge_index(0, 1, 5) == 0);
  CHECK(edge_index(3, 4, 5) == 9);
  CHECK(edge_index(4, 3, 5) == 9);
  CHECK(edge_of(edge_index(2, 4, 6), 6) == Edge{2, 4});
}

TEST_CASE("edge_index rejects loops and out-of-range nodes") {
  CHECK_THROWS_AS(edge_index(2, 2, 5), std::domain_error);
  CHECK_THROWS_AS(edge_index(0, 5, 5), std::domain_error);
  CHECK_THROWS_AS(edge_index(-1, 2, 5), std::domain_error);
  CHECK_THROWS_AS(edge_of(10, 5), std::domain_error);
}

TEST_CASE("edge_index is a bijection for all n <= 64") {
  for (Node n = 2; n <= 64; ++n) {
    EdgeId expected = 0;
    for (Node u = 0; u < n; ++u) {
      for (Node v = u + 1; v < n; ++v) {
        REQUIRE(edge_index(u, v, n) == expected);
        REQUIRE(edge_of(expected, n) == Edge{u, v});
        ++expected;
      }
    }
    REQUIRE(expected == complete_edge_count(n));
  }
}

TEST_CASE("GraphInstance::index agrees with edge_index") {
  const GraphInstance g = unit_complete(9);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge uv = g.edge(e);
    CHECK(g.index(uv.u, uv.v) == e);
    CHECK(g.index(uv.v, uv.u) == e);
  }
}

TEST_CASE("unit_complete") {
  const GraphInstance g5 = unit_complete(5);
  CHECK(g5.edge_count() == 10);
  CHECK(g5.kind() == CostKind::unit);
  for (double c : g5.costs()) CHECK(c == 1.0);
  CHECK(unit_complete(4).edge_count() == 6);
  CHECK_THROWS_AS(unit_complete(3), std::domain_error);
}

TEST_CASE("euclidean_instance is deterministic and bounded") {
  const GraphInstance a = euclidean_instance(50, 1);
  const GraphInstance b = euclidean_instance(50, 1);
  REQUIRE(a.edge_count() == b.edge_count());
  for (EdgeId e = 0; e < a.edge_count(); ++e) REQUIRE(a.cost(e) == b.cost(e));
  for (double c : a.costs()) {
    CHECK(c > 0.0);
    CHECK(c <= std::sqrt(2.0));
  }
  const GraphInstance c = euclidean_instance(50, 2);
  CHECK(c.cost(0) != a.cost(0));
  CHECK_THROWS_AS(euclidean_instance(3, 1), std::domain_error);
}

TEST_CASE("euclidean costs match point distances and satisfy the triangle inequality") {
  const GraphInstance g = euclidean_instance(10, 7);
  const auto pts = g.points();
  int triples = 0;
  for (Node a = 0; a < 10; ++a) {
    for (Node b = a + 1; b < 10; ++b) {
      const double d = std::hypot(pts[a].x - pts[b].x, pts[a].y - pts[b].y);
      CHECK(g.cost(edge_index(a, b, 10)) == doctest::Approx(d).epsilon(1e-15));
      for (Node c = b + 1; c < 10; ++c) {
        const double ab = g.cost(edge_index(a, b, 10));
        const double bc = g.cost(edge_index(b, c, 10));
        const double ac = g.cost(edge_index(a, c, 10));
        CHECK(ab <= bc + ac + 1e-12);
        CHECK(bc <= ab + ac + 1e-12);
        CHECK(ac <= ab + bc + 1e-12);
        ++triples;
      }
    }
  }
  CHECK(triples == 120);
}

TEST_CASE("coincident points are rejected") {
  std::vector<Point> pts{{0, 0}, {1, 0}, {0, 1}, {0, 0}};
  CHECK_THROWS_AS(GraphInstance::euclidean(pts), std::domain_error);
}

TEST_CASE("instance text format round-trips") {
  const GraphInstance g = euclidean_instance(12, 99);
  std::stringstream ss;
  write_instance(ss, g);
  const GraphInstance back = read_instance(ss);
  REQUIRE(back.kind() == CostKind::euclidean);
  REQUIRE(back.node_count() == 12);
  for (EdgeId e = 0; e < g.edge_count(); ++e) CHECK(back.cost(e) == g.cost(e));

  std::stringstream unit;
  write_instance(unit, unit_complete(7));
  CHECK(unit.str() == "7 unit\n");
  CHECK(read_instance(unit).edge_count() == 21);

  std::stringstream truncated("5 euclidean\n0 0\n1 1\n");
  CHECK_THROWS(read_instance(truncated));
  std::stringstream unknown("5 grid\n");
  CHECK_THROWS(read_instance(unknown));
}
