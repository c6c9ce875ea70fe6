#include "edo/diversity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace edo {

int overlap(const SpanningTree& a, const SpanningTree& b) {
  const auto ea = a.edges();
  const auto eb = b.edges();
  int shared = 0;
  auto i = ea.begin();
  auto j = eb.begin();
  while (i != ea.end() && j != eb.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  return shared;
}

Population::Population(Node n, EdgeId m) : n_(n), usage_(static_cast<std::size_t>(m), 0) {}

Population::Population(const GraphInstance& g, std::vector<SpanningTree> trees) : Population(g) {
  trees_.reserve(trees.size() + 1);
  for (auto& t : trees) add(std::move(t));
}

void Population::add(SpanningTree tree) {
  if (tree.node_count() != n_) throw std::invalid_argument("tree belongs to a graph of different size");
  for (EdgeId e : tree.edges()) {
    int& u = usage_[static_cast<std::size_t>(e)];
    // u(u-1) -> (u+1)u
    overlap_sum_ += 2 * u;
    ++u;
  }
  trees_.push_back(std::move(tree));
}

void Population::remove(std::size_t i) {
  if (i >= trees_.size()) throw std::out_of_range(fmt::format("tree index {} out of range", i));
  for (EdgeId e : trees_[i].edges()) {
    int& u = usage_[static_cast<std::size_t>(e)];
    --u;
    overlap_sum_ -= 2 * u;
  }
  trees_.erase(trees_.begin() + static_cast<std::ptrdiff_t>(i));
}

Diversity Population::max_diversity() const {
  const auto mu = static_cast<Diversity>(trees_.size());
  return mu * (mu - 1) * (n_ - 1);
}

Diversity Population::diversity() const { return max_diversity() - overlap_sum_; }

double Population::diversity_pct() const {
  const Diversity max = max_diversity();
  if (max == 0) return 100.0;
  return 100.0 * static_cast<double>(diversity()) / static_cast<double>(max);
}

Diversity Population::diversity_after_removal(std::size_t i) const {
  if (i >= trees_.size()) throw std::out_of_range(fmt::format("tree index {} out of range", i));
  std::int64_t removed = 0;
  for (EdgeId e : trees_[i].edges()) removed += usage_[static_cast<std::size_t>(e)] - 1;
  const auto mu = static_cast<Diversity>(trees_.size()) - 1;
  return mu * (mu - 1) * (n_ - 1) - (overlap_sum_ - 2 * removed);
}

std::pair<int, int> Population::usage_spread() const {
  const auto [lo, hi] = std::minmax_element(usage_.begin(), usage_.end());
  return {*lo, *hi};
}

void Population::check_invariants() const {
  std::vector<int> usage(usage_.size(), 0);
  for (const auto& t : trees_) {
    for (EdgeId e : t.edges()) ++usage[static_cast<std::size_t>(e)];
  }
  if (usage != usage_) throw std::logic_error("population usage counts out of sync");
  std::int64_t sum = 0;
  for (int u : usage) sum += static_cast<std::int64_t>(u) * (u - 1);
  if (sum != overlap_sum_) {
    throw std::logic_error(fmt::format("population overlap sum {} != recomputed {}", overlap_sum_, sum));
  }
}

Diversity population_diversity(const Population& p) { return p.diversity(); }
std::pair<int, int> usage_spread(const Population& p) { return p.usage_spread(); }
Diversity diversity_after_removal(const Population& p, std::size_t i) { return p.diversity_after_removal(i); }

TreeFeatures tree_features(const SpanningTree& tree) {
  const Node n = tree.node_count();
  TreeFeatures f{0, 0, 0};
  for (Node v = 0; v < n; ++v) {
    f.max_degree = std::max(f.max_degree, tree.degree(v));
    if (tree.degree(v) == 1) ++f.leaf_count;
  }

  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Node> queue;
  queue.reserve(static_cast<std::size_t>(n));
  // returns the farthest node from `from`, leaving distances in dist
  auto farthest = [&](Node from) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, from);
    dist[static_cast<std::size_t>(from)] = 0;
    Node last = from;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      last = queue[head];
      for (Node w : tree.neighbors(last)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(last)] + 1;
          queue.push_back(w);
        }
      }
    }
    return last;
  };
  const Node end = farthest(farthest(0));
  f.diameter = dist[static_cast<std::size_t>(end)];
  return f;
}

Feature parse_feature(std::string_view name) {
  if (name == "max_degree" || name == "maxdeg") return Feature::max_degree;
  if (name == "leaf_count" || name == "leaf") return Feature::leaf_count;
  if (name == "diameter" || name == "diam") return Feature::diameter;
  throw std::domain_error(fmt::format("unknown tree feature '{}'", name));
}

double feature_diversity(const Population& p, Feature which) {
  if (p.size() == 0) throw std::domain_error("feature diversity of an empty population");
  std::set<int> values;
  for (const auto& t : p.trees()) {
    const TreeFeatures f = tree_features(t);
    switch (which) {
      case Feature::max_degree: values.insert(f.max_degree); break;
      case Feature::leaf_count: values.insert(f.leaf_count); break;
      case Feature::diameter: values.insert(f.diameter); break;
    }
  }
  const auto attainable = std::min<std::size_t>(p.size(), static_cast<std::size_t>(p.node_count() - 2));
  return 100.0 * static_cast<double>(values.size()) / static_cast<double>(attainable);
}

}  // namespace edo
