#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "edo/graph.hpp"
#include "edo/mst.hpp"

namespace edo {

using Diversity = std::int64_t;

/// Number of edges shared by two trees over the same graph.
int overlap(const SpanningTree& a, const SpanningTree& b);

/// Ordered multiset of spanning trees with incrementally maintained
/// per-edge usage counts n(e,P) and the ordered-pair overlap sum
///   overlap_sum = sum_i sum_{j != i} o(T_i, T_j) = sum_e n(e,P) (n(e,P) - 1).
class Population {
 public:
  Population(Node n, EdgeId m);
  explicit Population(const GraphInstance& g) : Population(g.node_count(), g.edge_count()) {}
  Population(const GraphInstance& g, std::vector<SpanningTree> trees);

  void add(SpanningTree tree);
  /// Removes tree i, keeping the order of the others.
  void remove(std::size_t i);

  std::size_t size() const { return trees_.size(); }
  Node node_count() const { return n_; }
  const std::vector<SpanningTree>& trees() const { return trees_; }
  const SpanningTree& operator[](std::size_t i) const { return trees_[i]; }
  const std::vector<int>& usage() const { return usage_; }
  std::int64_t overlap_sum() const { return overlap_sum_; }

  /// D_o = mu(mu-1)(n-1) - overlap_sum.
  Diversity diversity() const;
  /// mu(mu-1)(n-1), attained iff the trees are pairwise edge-disjoint.
  Diversity max_diversity() const;
  /// 100 * D_o / max; a single tree (max = 0) counts as 100.
  double diversity_pct() const;

  /// D_o of the population without tree i, in O(n) from the usage counts.
  /// Throws std::out_of_range for a bad index.
  Diversity diversity_after_removal(std::size_t i) const;

  /// (min, max) of n(e,P) over all edges.
  std::pair<int, int> usage_spread() const;

  /// Recomputes usage and overlap_sum from scratch and throws
  /// std::logic_error if the cached values disagree.
  void check_invariants() const;

 private:
  Node n_;
  std::vector<SpanningTree> trees_;
  std::vector<int> usage_;
  std::int64_t overlap_sum_ = 0;
};

Diversity population_diversity(const Population& p);
std::pair<int, int> usage_spread(const Population& p);
Diversity diversity_after_removal(const Population& p, std::size_t i);

struct TreeFeatures {
  int max_degree;
  int leaf_count;
  int diameter;  // edges on the longest path

  friend bool operator==(const TreeFeatures&, const TreeFeatures&) = default;
};

TreeFeatures tree_features(const SpanningTree& tree);

enum class Feature { max_degree, leaf_count, diameter };

/// Accepts "max_degree"/"maxdeg", "leaf_count"/"leaf", "diameter"/"diam".
/// Throws std::domain_error for anything else.
Feature parse_feature(std::string_view name);

/// Percentage of distinct feature values among the trees, relative to
/// min(mu, n-2), the number of values that can be realized at once.
double feature_diversity(const Population& p, Feature which);

}  // namespace edo
