#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// A split: bipartition {side1, side2} of the vertices, both sides of size
// at least two, with N(side1) complete to N(side2).
struct Split {
  Bitset side1;
  Bitset side2;
};

// True iff (v1, v2) is a split of g. Disconnected input is an error;
// a bad bipartition is merely false.
bool is_split(const Graph& g, const Bitset& v1, const Bitset& v2);

// First split under the deterministic seed enumeration, or none iff g is
// prime. Graphs with fewer than four vertices are trivially prime (none).
// Disconnected input is an error.
std::optional<Split> find_split(const Graph& g);

enum class ComponentKind { Clique, Star, Prime };
const char* component_kind_name(ComponentKind k);

// One endpoint of a marker edge: the component index and the marker
// vertex name inside that component.
struct MarkerEnd {
  int component;
  std::string marker;
};

// Split decomposition: components carrying fresh marker vertices
// ("$m1", "$m2", ...) wired pairwise by marker edges. Recomposing the
// tree restores the original graph under its original labels.
struct DecompositionTree {
  std::vector<Graph> components;
  std::vector<ComponentKind> kinds;
  std::vector<std::pair<MarkerEnd, MarkerEnd>> marker_edges;
};

// Checks structural invariants (marker uniqueness, endpoint existence).
// Throws a structure error when violated.
void validate_tree(const DecompositionTree& t);

// Fully recursive decomposition: splits until every component is prime
// or has at most three vertices. Connected input required.
DecompositionTree decompose(const Graph& g);

// Same recursion, but candidate side sets (index sets over g's original
// vertices) are tried before the generic split search at every level.
// Invalid hints are skipped, so the result is always a valid
// decomposition; hints only affect speed and recursion order.
DecompositionTree decompose_with_hints(const Graph& g, const std::vector<Bitset>& hints);

// Merges adjacent components while the merge stays a clique or a star:
// two cliques always merge; two stars merge exactly when the marker edge
// joins a leaf marker of one to the center marker of the other. The
// result is the unique minimal decomposition into cliques, stars and
// prime graphs.
DecompositionTree minimalize(DecompositionTree t);

// Contracts every marker edge, replacing each marker pair by the complete
// join of their attachment neighborhoods. Dangling markers are an error.
Graph recompose(const DecompositionTree& t);

}  // namespace wordrep
