#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Certifying structure: a partition of the vertices into cliques (bags)
// arranged in a tree so that tree-adjacent bags meet in a complete
// bipartite graph between boundary subsets and non-adjacent bags meet in
// no edges at all.
struct PartitionTree {
  std::vector<std::vector<std::string>> bags;
  std::vector<std::pair<int, int>> tree_edges;
};

struct TreeReport {
  bool ok = false;
  // "wellformed", "bag-clique", "adjacent-product", "nonadjacent-empty"
  std::string condition;
  std::string detail;
};

TreeReport verify_partition_tree(const Graph& g, const PartitionTree& t);

// bd(A, B): vertices of bag A with a neighbor in bag B. The bags must be
// adjacent in the tree.
Bitset boundary(const Graph& g, const PartitionTree& t, int bag_a, int bag_b);

// Star tree whose leaf bags all have size one; a single bag counts as a
// degenerate star.
bool is_star_partition_tree(const PartitionTree& t);

// Explicit generator input: bag sizes plus tree edges carrying the chosen
// boundary subsets as member indices within each bag.
struct TreeSpecEdge {
  int bag_a = 0;
  int bag_b = 0;
  std::vector<int> boundary_a;
  std::vector<int> boundary_b;
};

struct TreeSpec {
  std::vector<int> bag_sizes;
  std::vector<TreeSpecEdge> edges;
};

struct CertifiedGraph {
  Graph graph;
  PartitionTree tree;
};

// Emits the graph determined by the spec together with its certifying
// tree; the result always passes verify_partition_tree. Malformed specs
// are errors.
CertifiedGraph expand_partition_tree(const TreeSpec& spec);

struct RandomTreeParams {
  int min_bags = 2;
  int max_bags = 12;
  int max_bag_size = 5;
  int max_vertices = 60;
};

// Reproducible sampler: tree shape, bag sizes and non-empty boundaries
// are all drawn from the seed.
CertifiedGraph random_partition_tree(const RandomTreeParams& params, uint64_t seed);

struct ChordalityWitness {
  std::string pivot, u, w;  // u, w: nonadjacent later neighbors of pivot
};

// Lexicographic BFS followed by the perfect-elimination check; a witness
// is returned when the reversed visit order is not a perfect elimination
// ordering (which for no ordering can then succeed).
std::optional<ChordalityWitness> chordality_witness(const Graph& g);

bool is_chordal(const Graph& g);

}  // namespace wordrep
