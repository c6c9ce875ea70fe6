#pragma once

#include <span>
#include <vector>

#include "edo/graph.hpp"

namespace edo {

/// Spanning tree of a complete graph: sorted canonical edge indices,
/// per-node adjacency and the cached total cost.
class SpanningTree {
 public:
  /// Validates that `edges` forms a spanning tree of g (n-1 distinct
  /// in-range edges, connected). Throws std::domain_error otherwise.
  static SpanningTree from_edges(const GraphInstance& g, std::vector<EdgeId> edges);

  Node node_count() const { return static_cast<Node>(adjacency_.size()); }
  std::span<const EdgeId> edges() const { return edges_; }
  std::span<const Node> neighbors(Node v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  Node degree(Node v) const { return static_cast<Node>(adjacency_[static_cast<std::size_t>(v)].size()); }
  double cost() const { return cost_; }

  bool contains(EdgeId e) const;

  /// Replaces tree edge `remove` by non-tree edge `insert`. The caller
  /// guarantees `remove` lies on the tree path between the endpoints of
  /// `insert`, so the result is again a spanning tree.
  void exchange(const GraphInstance& g, EdgeId insert, EdgeId remove);

  friend bool operator==(const SpanningTree& a, const SpanningTree& b) { return a.edges_ == b.edges_; }

 private:
  SpanningTree() = default;
  void recompute_cost(const GraphInstance& g);

  std::vector<EdgeId> edges_;
  std::vector<std::vector<Node>> adjacency_;
  double cost_ = 0.0;
};

/// Sum of member edge costs, summed in canonical edge order.
/// Throws std::domain_error for an empty tree or out-of-range edges.
double tree_cost(const SpanningTree& tree, const GraphInstance& g);
double tree_cost(std::span<const EdgeId> edges, const GraphInstance& g);

struct MstResult {
  SpanningTree tree;
  double opt;
};

/// Prim's algorithm with a dense O(n^2) scan; equal costs resolve to the
/// smaller canonical edge index.
MstResult minimum_spanning_tree(const GraphInstance& g);

}  // namespace edo
