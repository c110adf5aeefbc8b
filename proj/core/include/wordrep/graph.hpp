#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wordrep/bitset.hpp"
#include "wordrep/error.hpp"

namespace wordrep {

// Simple undirected graph with string-labeled vertices. Vertex order is
// insertion order and drives every deterministic tie-break downstream.
// No self-loops, no duplicate edges.
class Graph {
 public:
  Graph() = default;

  // Adds a vertex; duplicate names are an error.
  int add_vertex(const std::string& name);
  // Adds the vertex if absent, returns its index either way.
  int ensure_vertex(const std::string& name);

  void add_edge(int u, int v);
  void add_edge(const std::string& u, const std::string& v);

  int n() const { return static_cast<int>(names_.size()); }
  int m() const { return m_; }

  bool has_vertex(const std::string& name) const { return index_.count(name) > 0; }
  std::optional<int> find_vertex(const std::string& name) const;
  // Throws unknown-vertex.
  int index_of(const std::string& name) const;
  const std::string& name_of(int i) const { return names_[i]; }
  const std::vector<std::string>& vertex_names() const { return names_; }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset& row(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  // Edges as index pairs (u < v), sorted.
  std::vector<std::pair<int, int>> edge_list() const;
  bool connected() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bitset> adj_;
  int m_ = 0;
};

// Resolves vertex names to a bitset over g; unknown names are errors.
Bitset vertex_set(const Graph& g, const std::vector<std::string>& names);
std::vector<std::string> set_names(const Graph& g, const Bitset& s);

// N(a): adjacent vertices of a.
Bitset neighborhood(const Graph& g, int a);
Bitset neighborhood(const Graph& g, const std::string& a);

// N(A): union of member neighborhoods minus A.
Bitset set_neighborhood(const Graph& g, const Bitset& a);

// G[A]: vertex order inherited from g.
Graph induced_subgraph(const Graph& g, const Bitset& a);

// Edges of the bipartite graph G[A, B]; A and B must be disjoint.
std::vector<std::pair<int, int>> bipartite_edges(const Graph& g, const Bitset& a,
                                                 const Bitset& b);

// True iff A and B are disjoint and every A-B pair is an edge.
// Vacuously true when either side is empty (and they are disjoint).
bool is_complete_to(const Graph& g, const Bitset& a, const Bitset& b);

enum class Shape { Clique, Star, Prime, Other };

const char* shape_name(Shape s);

// Clique covers K1 and K2; a star is K_{1,t} with t >= 2 under that
// tie-break. Prime means no split exists. Connected input required.
Shape classify_shape(const Graph& g);

// Plumbing: relabels collisions in b by appending apostrophes.
Graph disjoint_union(const Graph& a, const Graph& b);

// Label-level equality: same vertex set and same edge set, order-insensitive.
bool same_labeled_graph(const Graph& a, const Graph& b);

// Deterministic canonical copy: vertices re-inserted in sorted name order.
Graph canonical_copy(const Graph& g);

}  // namespace wordrep
