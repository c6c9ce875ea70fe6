#include "edo/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace edo {

namespace {

constexpr Node kMinNodes = 4;

void require_min_nodes(Node n) {
  if (n < kMinNodes) {
    throw std::domain_error(fmt::format("complete graph needs at least {} nodes, got {}", kMinNodes, n));
  }
}

}  // namespace

EdgeId edge_index(Node u, Node v, Node n) {
  if (u == v || u < 0 || v < 0 || u >= n || v >= n) {
    throw std::domain_error(fmt::format("invalid edge ({}, {}) for n = {}", u, v, n));
  }
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Edge edge_of(EdgeId index, Node n) {
  if (n < 2 || index < 0 || index >= complete_edge_count(n)) {
    throw std::domain_error(fmt::format("edge index {} out of range for n = {}", index, n));
  }
  Node u = 0;
  EdgeId row = n - 1;
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return Edge{u, u + 1 + index};
}

GraphInstance::GraphInstance(Node n, CostKind kind) : n_(n), kind_(kind) {
  const auto m = static_cast<std::size_t>(complete_edge_count(n));
  costs_.resize(m);
  edges_.reserve(m);
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) edges_.push_back(Edge{u, v});
  }
}

GraphInstance GraphInstance::unit(Node n) {
  require_min_nodes(n);
  GraphInstance g(n, CostKind::unit);
  std::fill(g.costs_.begin(), g.costs_.end(), 1.0);
  return g;
}

GraphInstance GraphInstance::euclidean(std::vector<Point> points) {
  const auto n = static_cast<Node>(points.size());
  require_min_nodes(n);
  GraphInstance g(n, CostKind::euclidean);
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    const Point& a = points[static_cast<std::size_t>(g.edges_[e].u)];
    const Point& b = points[static_cast<std::size_t>(g.edges_[e].v)];
    const double d = std::hypot(a.x - b.x, a.y - b.y);
    if (!(d > 0.0)) {
      throw std::domain_error(fmt::format("points {} and {} coincide", g.edges_[e].u, g.edges_[e].v));
    }
    g.costs_[e] = d;
  }
  g.points_ = std::move(points);
  return g;
}

GraphInstance unit_complete(Node n) { return GraphInstance::unit(n); }

GraphInstance euclidean_instance(Node n, std::uint64_t seed) {
  require_min_nodes(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<Point> points(static_cast<std::size_t>(n));
  for (auto& p : points) {
    p.x = coord(rng);
    p.y = coord(rng);
  }
  return GraphInstance::euclidean(std::move(points));
}

void write_instance(std::ostream& out, const GraphInstance& g) {
  const bool euclid = g.kind() == CostKind::euclidean;
  fmt::print(out, "{} {}\n", g.node_count(), euclid ? "euclidean" : "unit");
  if (euclid) {
    // shortest round-trip representation keeps recomputed costs bit-identical
    for (const Point& p : g.points()) fmt::print(out, "{} {}\n", p.x, p.y);
  }
}

GraphInstance read_instance(std::istream& in) {
  Node n = 0;
  std::string kind;
  if (!(in >> n >> kind)) throw std::runtime_error("instance: missing header line `n kind`");
  if (kind == "unit") return unit_complete(n);
  if (kind != "euclidean") throw std::runtime_error(fmt::format("instance: unknown kind '{}'", kind));
  require_min_nodes(n);
  std::vector<Point> points(static_cast<std::size_t>(n));
  for (Node i = 0; i < n; ++i) {
    if (!(in >> points[static_cast<std::size_t>(i)].x >> points[static_cast<std::size_t>(i)].y)) {
      throw std::runtime_error(fmt::format("instance: expected {} points, read {}", n, i));
    }
  }
  return GraphInstance::euclidean(std::move(points));
}

}  // namespace edo
