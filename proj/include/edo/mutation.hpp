#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "edo/graph.hpp"
#include "edo/mst.hpp"

namespace edo {

using Rng = std::mt19937_64;

/// How many one-edge exchanges a single mutation performs.
struct MutationStrategy {
  enum class Kind { uniform, poisson };

  Kind kind = Kind::uniform;
  int max_moves = 1;   // uniform: k ~ U{1..max_moves}
  double rate = 1.0;   // poisson: k = 1 + Pois(rate)

  static MutationStrategy uniform(int max_moves);
  static MutationStrategy poisson(double rate = 1.0);

  /// Parses `uniform:<l>`, `poisson` or `poisson:<lambda>`.
  static MutationStrategy parse(std::string_view text);

  /// Inverse of parse, e.g. "uniform:3" or "poisson:1".
  std::string label() const;

  friend bool operator==(const MutationStrategy&, const MutationStrategy&) = default;
};

struct Exchange {
  EdgeId inserted;
  EdgeId removed;
};

/// Tree path between the endpoints of the non-tree edge `e`, as edge
/// indices ordered from e.u to e.v. Prepending e closes the unique cycle.
/// Throws std::domain_error if e is already a tree edge.
std::vector<EdgeId> cycle_path(const SpanningTree& tree, const GraphInstance& g, Edge e);

/// Draws one exchange: the inserted edge is uniform over the non-tree
/// edges, the removed edge uniform over the tree path it closes.
Exchange sample_exchange(const SpanningTree& tree, const GraphInstance& g, Rng& rng);

/// One-edge-exchange (1-EX) applied in place.
Exchange apply_one_edge_exchange(SpanningTree& tree, const GraphInstance& g, Rng& rng);

SpanningTree one_edge_exchange(const SpanningTree& tree, const GraphInstance& g, Rng& rng);

int sample_move_count(const MutationStrategy& strategy, Rng& rng);

/// Applies sample_move_count(strategy) sequential 1-EX steps to a copy.
SpanningTree mutate(const SpanningTree& tree, const GraphInstance& g, const MutationStrategy& strategy, Rng& rng);

/// For a shared edge of `tree` and `other`: the number of edges that can
/// replace `shared` in `tree` (reconnecting the two components left by
/// removing it) without being used by `other`. Each such exchange lowers
/// the overlap by exactly one.
int count_improving_exchanges(const SpanningTree& tree, const SpanningTree& other, EdgeId shared,
                              const GraphInstance& g);

}  // namespace edo
