#include "edo/mst.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace edo {

SpanningTree SpanningTree::from_edges(const GraphInstance& g, std::vector<EdgeId> edges) {
  const Node n = g.node_count();
  if (static_cast<Node>(edges.size()) != n - 1) {
    throw std::domain_error(fmt::format("spanning tree needs {} edges, got {}", n - 1, edges.size()));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::domain_error("spanning tree has a repeated edge");
  }
  if (edges.front() < 0 || edges.back() >= g.edge_count()) {
    throw std::domain_error("spanning tree edge index out of range");
  }

  SpanningTree t;
  t.adjacency_.resize(static_cast<std::size_t>(n));
  for (EdgeId e : edges) {
    const Edge uv = g.edge(e);
    t.adjacency_[static_cast<std::size_t>(uv.u)].push_back(uv.v);
    t.adjacency_[static_cast<std::size_t>(uv.v)].push_back(uv.u);
  }

  // n-1 edges plus connectivity implies acyclic
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Node> stack{0};
  seen[0] = 1;
  Node reached = 1;
  while (!stack.empty()) {
    const Node v = stack.back();
    stack.pop_back();
    for (Node w : t.adjacency_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw std::domain_error("edge set is not connected");

  t.edges_ = std::move(edges);
  t.recompute_cost(g);
  return t;
}

bool SpanningTree::contains(EdgeId e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

void SpanningTree::exchange(const GraphInstance& g, EdgeId insert, EdgeId remove) {
  if (insert == remove) return;
  auto out = std::lower_bound(edges_.begin(), edges_.end(), remove);
  edges_.erase(out);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), insert), insert);

  const Edge r = g.edge(remove);
  auto drop = [this](Node from, Node to) {
    auto& adj = adjacency_[static_cast<std::size_t>(from)];
    adj.erase(std::find(adj.begin(), adj.end(), to));
  };
  drop(r.u, r.v);
  drop(r.v, r.u);
  const Edge a = g.edge(insert);
  adjacency_[static_cast<std::size_t>(a.u)].push_back(a.v);
  adjacency_[static_cast<std::size_t>(a.v)].push_back(a.u);

  recompute_cost(g);
}

void SpanningTree::recompute_cost(const GraphInstance& g) {
  double sum = 0.0;
  for (EdgeId e : edges_) sum += g.cost(e);
  cost_ = sum;
}

double tree_cost(std::span<const EdgeId> edges, const GraphInstance& g) {
  if (edges.empty()) throw std::domain_error("empty edge set is not a spanning tree");
  double sum = 0.0;
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) throw std::domain_error(fmt::format("edge index {} out of range", e));
    sum += g.cost(e);
  }
  return sum;
}

double tree_cost(const SpanningTree& tree, const GraphInstance& g) { return tree_cost(tree.edges(), g); }

MstResult minimum_spanning_tree(const GraphInstance& g) {
  const Node n = g.node_count();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
  std::vector<double> best_cost(static_cast<std::size_t>(n), kInf);
  std::vector<EdgeId> best_edge(static_cast<std::size_t>(n), -1);
  std::vector<EdgeId> chosen;
  chosen.reserve(static_cast<std::size_t>(n - 1));

  Node current = 0;
  in_tree[0] = 1;
  for (Node added = 1; added < n; ++added) {
    Node next = -1;
    for (Node v = 0; v < n; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (in_tree[vi]) continue;
      const EdgeId e = g.index(current, v);
      const double c = g.cost(e);
      if (c < best_cost[vi] || (c == best_cost[vi] && e < best_edge[vi])) {
        best_cost[vi] = c;
        best_edge[vi] = e;
      }
      if (next < 0) {
        next = v;
        continue;
      }
      const auto ni = static_cast<std::size_t>(next);
      if (best_cost[vi] < best_cost[ni] || (best_cost[vi] == best_cost[ni] && best_edge[vi] < best_edge[ni])) {
        next = v;
      }
    }
    in_tree[static_cast<std::size_t>(next)] = 1;
    chosen.push_back(best_edge[static_cast<std::size_t>(next)]);
    current = next;
  }

  SpanningTree tree = SpanningTree::from_edges(g, std::move(chosen));
  const double opt = tree.cost();
  return MstResult{std::move(tree), opt};
}

}  // namespace edo
