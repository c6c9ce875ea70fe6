#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace edo {

using Node = std::int32_t;
using EdgeId = std::int32_t;

/// Undirected edge in canonical form (u < v).
struct Edge {
  Node u = 0;
  Node v = 0;

  auto operator<=>(const Edge&) const = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class CostKind { unit, euclidean };

/// Number of edges of the complete graph on n nodes.
constexpr EdgeId complete_edge_count(Node n) { return n * (n - 1) / 2; }

/// Canonical index of {u, v} in lexicographic (u, v) order, u < v.
/// Throws std::domain_error for u == v or nodes outside [0, n).
EdgeId edge_index(Node u, Node v, Node n);

/// Inverse of edge_index.
Edge edge_of(EdgeId index, Node n);

/// Complete graph with positive edge costs, immutable after construction.
class GraphInstance {
 public:
  static GraphInstance unit(Node n);
  static GraphInstance euclidean(std::vector<Point> points);

  Node node_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(costs_.size()); }
  CostKind kind() const { return kind_; }

  double cost(EdgeId e) const { return costs_[static_cast<std::size_t>(e)]; }
  std::span<const double> costs() const { return costs_; }
  std::span<const Point> points() const { return points_; }

  /// Endpoints of edge e; table lookup.
  Edge edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  /// Unchecked canonical index; callers guarantee u != v, both in range.
  EdgeId index(Node u, Node v) const {
    if (u > v) std::swap(u, v);
    return u * n_ - u * (u + 1) / 2 + (v - u - 1);
  }

 private:
  GraphInstance(Node n, CostKind kind);

  Node n_;
  CostKind kind_;
  std::vector<double> costs_;
  std::vector<Edge> edges_;
  std::vector<Point> points_;
};

/// Complete graph with every cost equal to 1. Requires n >= 4.
GraphInstance unit_complete(Node n);

/// n points i.i.d. uniform on [0,1]^2, costs are pairwise Euclidean
/// distances. Deterministic in seed. Requires n >= 4.
GraphInstance euclidean_instance(Node n, std::uint64_t seed);

/// Plain-text instance format: `n kind`, then n lines `x y` for euclidean.
void write_instance(std::ostream& out, const GraphInstance& g);
GraphInstance read_instance(std::istream& in);

}  // namespace edo
