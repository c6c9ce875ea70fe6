#include "edo/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace edo {

namespace {

// i, i+1, i-1, i+2, i-2, ..., i+size/2 over Z_size
std::vector<Node> zig_zag(Node start, Node size) {
  std::vector<Node> route;
  route.reserve(static_cast<std::size_t>(size));
  route.push_back(start);
  for (Node step = 1; static_cast<Node>(route.size()) < size; ++step) {
    route.push_back(((start + step) % size + size) % size);
    if (static_cast<Node>(route.size()) < size) route.push_back(((start - step) % size + size) % size);
  }
  return route;
}

std::vector<EdgeId> route_edges(const std::vector<Node>& route, Node n, bool closed) {
  std::vector<EdgeId> edges;
  for (std::size_t k = 0; k + 1 < route.size(); ++k) edges.push_back(edge_index(route[k], route[k + 1], n));
  if (closed) edges.push_back(edge_index(route.back(), route.front(), n));
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

Decomposition path_decomposition(Node n) {
  if (n < 4 || n % 2 != 0) throw std::domain_error(fmt::format("path decomposition needs even n >= 4, got {}", n));
  Decomposition d{DecompositionKind::hamiltonian_paths, n, {}, {}};
  for (Node i = 0; i < n / 2; ++i) {
    d.routes.push_back(zig_zag(i, n));
    d.parts.push_back(route_edges(d.routes.back(), n, false));
  }
  return d;
}

Decomposition cycle_decomposition(Node n) {
  if (n < 5 || n % 2 == 0) throw std::domain_error(fmt::format("cycle decomposition needs odd n >= 5, got {}", n));
  const Node hub = n - 1;
  Decomposition d{DecompositionKind::hamiltonian_cycles, n, {}, {}};
  for (Node i = 0; i < (n - 1) / 2; ++i) {
    std::vector<Node> route{hub};
    const auto path = zig_zag(i, n - 1);
    route.insert(route.end(), path.begin(), path.end());
    d.routes.push_back(std::move(route));
    d.parts.push_back(route_edges(d.routes.back(), n, true));
  }
  return d;
}

std::vector<std::string> check_decomposition(const Decomposition& d) {
  std::vector<std::string> problems;
  const Node n = d.n;
  const bool cycles = d.kind == DecompositionKind::hamiltonian_cycles;
  const std::size_t expected_parts = static_cast<std::size_t>(cycles ? (n - 1) / 2 : n / 2);
  const std::size_t part_size = static_cast<std::size_t>(cycles ? n : n - 1);
  if (d.parts.size() != expected_parts) {
    problems.push_back(fmt::format("expected {} parts, got {}", expected_parts, d.parts.size()));
  }

  std::vector<int> cover(static_cast<std::size_t>(complete_edge_count(n)), 0);
  for (std::size_t p = 0; p < d.parts.size(); ++p) {
    const auto& part = d.parts[p];
    if (part.size() != part_size) problems.push_back(fmt::format("part {} has {} edges", p, part.size()));

    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Node>> adj(static_cast<std::size_t>(n));
    for (EdgeId e : part) {
      ++cover[static_cast<std::size_t>(e)];
      const Edge uv = edge_of(e, n);
      ++degree[static_cast<std::size_t>(uv.u)];
      ++degree[static_cast<std::size_t>(uv.v)];
      adj[static_cast<std::size_t>(uv.u)].push_back(uv.v);
      adj[static_cast<std::size_t>(uv.v)].push_back(uv.u);
    }
    const int max_deg = *std::max_element(degree.begin(), degree.end());
    const int min_deg = *std::min_element(degree.begin(), degree.end());
    if (max_deg > 2 || (cycles && min_deg != 2) || (!cycles && min_deg < 1)) {
      problems.push_back(fmt::format("part {} has degrees in [{}, {}]", p, min_deg, max_deg));
    }

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Node> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const Node x = stack.back();
      stack.pop_back();
      for (Node y : adj[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != n) problems.push_back(fmt::format("part {} is not spanning and connected", p));
  }

  const auto overused = std::count_if(cover.begin(), cover.end(), [](int c) { return c > 1; });
  const auto missing = std::count(cover.begin(), cover.end(), 0);
  if (overused > 0) problems.push_back(fmt::format("{} edges are shared between parts", overused));
  if (missing > 0) problems.push_back(fmt::format("{} edges are not covered", missing));
  return problems;
}

std::vector<SpanningTree> build_h(const GraphInstance& g) {
  const Node n = g.node_count();
  if (n % 2 == 0) throw std::domain_error(fmt::format("the H construction needs odd n, got {}", n));
  const Node hub = n - 1;
  const Decomposition d = cycle_decomposition(n);

  // route = hub, z_0, ..., z_{n-2}: first hub edge towards z_0, second towards z_{n-2}
  auto without = [&](std::size_t i, Node endpoint) {
    std::vector<EdgeId> edges = d.parts[i];
    edges.erase(std::find(edges.begin(), edges.end(), g.index(hub, endpoint)));
    return SpanningTree::from_edges(g, std::move(edges));
  };

  std::vector<SpanningTree> h;
  h.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < d.routes.size(); ++i) h.push_back(without(i, d.routes[i][1]));
  h.push_back(star_tree(g, hub));
  for (std::size_t i = 0; i < d.routes.size(); ++i) h.push_back(without(i, d.routes[i].back()));
  return h;
}

Population balanced_population(const GraphInstance& g, int mu) {
  if (mu < 1) throw std::domain_error(fmt::format("population size must be >= 1, got {}", mu));
  const Node n = g.node_count();
  std::vector<SpanningTree> base;
  if (n % 2 == 0) {
    for (auto& part : path_decomposition(n).parts) base.push_back(SpanningTree::from_edges(g, std::move(part)));
  } else {
    base = build_h(g);
  }
  Population p(g);
  for (int i = 0; i < mu; ++i) p.add(base[static_cast<std::size_t>(i) % base.size()]);
  return p;
}

SpanningTree star_tree(const GraphInstance& g, Node center) {
  const Node n = g.node_count();
  if (center < 0 || center >= n) throw std::domain_error(fmt::format("star center {} out of range", center));
  std::vector<EdgeId> edges;
  for (Node v = 0; v < n; ++v) {
    if (v != center) edges.push_back(g.index(center, v));
  }
  return SpanningTree::from_edges(g, std::move(edges));
}

std::vector<SpanningTree> star_pair_plateau(const GraphInstance& g, Node first_center, Node second_center) {
  if (first_center == second_center) throw std::domain_error("plateau stars need distinct centers");
  std::vector<SpanningTree> pair;
  pair.push_back(star_tree(g, first_center));
  pair.push_back(star_tree(g, second_center));
  return pair;
}

}  // namespace edo
