#include "edo/mutation.hpp"

#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

namespace edo {

MutationStrategy MutationStrategy::uniform(int max_moves) {
  if (max_moves < 1) throw std::domain_error(fmt::format("uniform strategy needs l >= 1, got {}", max_moves));
  return MutationStrategy{Kind::uniform, max_moves, 1.0};
}

MutationStrategy MutationStrategy::poisson(double rate) {
  if (!(rate > 0.0)) throw std::domain_error(fmt::format("poisson strategy needs lambda > 0, got {}", rate));
  return MutationStrategy{Kind::poisson, 1, rate};
}

MutationStrategy MutationStrategy::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto bad = [&] { return std::invalid_argument(fmt::format("bad mutation strategy '{}'", text)); };

  if (name == "uniform") {
    int l = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), l);
    if (arg.empty() || ec != std::errc{} || ptr != arg.data() + arg.size()) throw bad();
    return uniform(l);
  }
  if (name == "poisson") {
    if (arg.empty()) return poisson(1.0);
    std::size_t used = 0;
    double rate = 0.0;
    try {
      rate = std::stod(std::string(arg), &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != arg.size()) throw bad();
    return poisson(rate);
  }
  throw bad();
}

std::string MutationStrategy::label() const {
  if (kind == Kind::uniform) return fmt::format("uniform:{}", max_moves);
  return fmt::format("poisson:{}", rate);
}

std::vector<EdgeId> cycle_path(const SpanningTree& tree, const GraphInstance& g, Edge e) {
  const Node n = tree.node_count();
  const EdgeId id = edge_index(e.u, e.v, n);
  if (tree.contains(id)) throw std::domain_error(fmt::format("edge ({}, {}) is already in the tree", e.u, e.v));

  // BFS from e.v so that walking parents from e.u yields the path in u -> v order
  std::vector<Node> parent(static_cast<std::size_t>(n), -1);
  std::vector<Node> queue;
  queue.reserve(static_cast<std::size_t>(n));
  queue.push_back(e.v);
  parent[static_cast<std::size_t>(e.v)] = e.v;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Node x = queue[head];
    if (x == e.u) break;
    for (Node y : tree.neighbors(x)) {
      if (parent[static_cast<std::size_t>(y)] < 0) {
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
    }
  }

  std::vector<EdgeId> path;
  for (Node x = e.u; x != e.v; x = parent[static_cast<std::size_t>(x)]) {
    path.push_back(g.index(x, parent[static_cast<std::size_t>(x)]));
  }
  return path;
}

Exchange sample_exchange(const SpanningTree& tree, const GraphInstance& g, Rng& rng) {
  // rejection over all m edges is uniform over the m - (n - 1) non-tree edges
  std::uniform_int_distribution<EdgeId> pick_edge(0, g.edge_count() - 1);
  EdgeId inserted = pick_edge(rng);
  while (tree.contains(inserted)) inserted = pick_edge(rng);

  const std::vector<EdgeId> path = cycle_path(tree, g, g.edge(inserted));
  std::uniform_int_distribution<std::size_t> pick_removed(0, path.size() - 1);
  return Exchange{inserted, path[pick_removed(rng)]};
}

Exchange apply_one_edge_exchange(SpanningTree& tree, const GraphInstance& g, Rng& rng) {
  const Exchange x = sample_exchange(tree, g, rng);
  tree.exchange(g, x.inserted, x.removed);
  return x;
}

SpanningTree one_edge_exchange(const SpanningTree& tree, const GraphInstance& g, Rng& rng) {
  SpanningTree child = tree;
  apply_one_edge_exchange(child, g, rng);
  return child;
}

int sample_move_count(const MutationStrategy& strategy, Rng& rng) {
  if (strategy.kind == MutationStrategy::Kind::uniform) {
    if (strategy.max_moves == 1) return 1;
    return std::uniform_int_distribution<int>(1, strategy.max_moves)(rng);
  }
  return 1 + std::poisson_distribution<int>(strategy.rate)(rng);
}

SpanningTree mutate(const SpanningTree& tree, const GraphInstance& g, const MutationStrategy& strategy, Rng& rng) {
  SpanningTree child = tree;
  const int moves = sample_move_count(strategy, rng);
  for (int i = 0; i < moves; ++i) apply_one_edge_exchange(child, g, rng);
  return child;
}

int count_improving_exchanges(const SpanningTree& tree, const SpanningTree& other, EdgeId shared,
                              const GraphInstance& g) {
  if (!tree.contains(shared) || !other.contains(shared)) {
    throw std::domain_error(fmt::format("edge {} is not shared by both trees", shared));
  }
  const Node n = tree.node_count();
  const Edge cut = g.edge(shared);

  // side[v] = 1 for the component of cut.u in tree minus {shared}
  std::vector<char> side(static_cast<std::size_t>(n), 0);
  std::vector<Node> stack{cut.u};
  side[static_cast<std::size_t>(cut.u)] = 1;
  while (!stack.empty()) {
    const Node x = stack.back();
    stack.pop_back();
    for (Node y : tree.neighbors(x)) {
      if ((x == cut.u && y == cut.v) || side[static_cast<std::size_t>(y)]) continue;
      side[static_cast<std::size_t>(y)] = 1;
      stack.push_back(y);
    }
  }

  int count = 0;
  for (Node a = 0; a < n; ++a) {
    if (!side[static_cast<std::size_t>(a)]) continue;
    for (Node b = 0; b < n; ++b) {
      if (side[static_cast<std::size_t>(b)]) continue;
      const EdgeId e = g.index(a, b);
      if (e != shared && !other.contains(e)) ++count;
    }
  }
  return count;
}

}  // namespace edo
