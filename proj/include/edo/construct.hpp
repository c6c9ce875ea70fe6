#pragma once

#include <string>
#include <vector>

#include "edo/diversity.hpp"
#include "edo/graph.hpp"
#include "edo/mst.hpp"

namespace edo {

enum class DecompositionKind { hamiltonian_paths, hamiltonian_cycles };

/// Partition of E(K_n) into Hamiltonian paths (n even) or Hamiltonian
/// cycles (n odd).
struct Decomposition {
  DecompositionKind kind;
  Node n;
  /// Vertex order of each part; cycles close back to the first vertex.
  std::vector<std::vector<Node>> routes;
  /// Sorted canonical edge indices of each part.
  std::vector<std::vector<EdgeId>> parts;
};

/// n/2 zig-zag paths i, i+1, i-1, i+2, i-2, ..., i+n/2 (mod n), i < n/2.
/// Requires even n >= 4 (std::domain_error otherwise).
Decomposition path_decomposition(Node n);

/// Walecki: hub n-1 joined to the zig-zag paths of K_{n-1}, giving
/// (n-1)/2 Hamiltonian cycles. Requires odd n >= 5.
Decomposition cycle_decomposition(Node n);

/// Empty when the decomposition is valid; otherwise one message per
/// violated property (overlap, cover, shape of a part).
std::vector<std::string> check_decomposition(const Decomposition& d);

/// The n trees H_1..H_n for odd n: each Walecki cycle minus its hub edge
/// towards the zig-zag start, the star at the hub, then each cycle minus
/// its hub edge towards the zig-zag end. Every edge is used exactly twice.
std::vector<SpanningTree> build_h(const GraphInstance& g);

/// mu trees whose edge usage differs by at most one across all edges:
/// tree i is part (i mod h) of the path decomposition for even n, and
/// H_{(i mod n)+1} for odd n. For mu <= n/2 the trees are edge-disjoint.
Population balanced_population(const GraphInstance& g, int mu);

SpanningTree star_tree(const GraphInstance& g, Node center);

/// Two stars whose only shared edge joins their centers: a state where no
/// single 1-EX step increases D_o.
std::vector<SpanningTree> star_pair_plateau(const GraphInstance& g, Node first_center = 0, Node second_center = 1);

}  // namespace edo
