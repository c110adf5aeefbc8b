#pragma once

#include <random>
#include <string>

#include "wordrep/graph.hpp"

namespace testsupport {

using wordrep::Graph;

inline Graph path_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::string(1, static_cast<char>('a' + i)));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph clique_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::string(1, static_cast<char>('a' + i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph star_graph(int leaves) {
  Graph g;
  g.add_vertex("c");
  for (int i = 1; i <= leaves; ++i) {
    g.add_vertex("l" + std::to_string(i));
    g.add_edge(0, i);
  }
  return g;
}

// C5 plus a hub adjacent to the whole cycle.
inline Graph wheel5() {
  Graph g;
  for (int i = 0; i < 5; ++i) g.add_vertex("c" + std::to_string(i));
  g.add_vertex("hub");
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, 5);
  }
  return g;
}

inline Graph relabeled(const Graph& g, const std::vector<int>& perm) {
  Graph h;
  for (int i = 0; i < g.n(); ++i) h.add_vertex(g.name_of(perm[i]));
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (g.adjacent(perm[i], perm[j])) h.add_edge(i, j);
  return h;
}

// Random connected graph on n vertices, edge probability ~p percent.
inline Graph random_connected(int n, int p_percent, uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (static_cast<int>(rng() % 100) < p_percent) g.add_edge(i, j);
    if (g.connected()) return g;
  }
}

// Random split graph: clique of size k, `extra` independent vertices with
// random non-empty clique neighborhoods.
inline Graph random_split_graph(int k, int extra, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g;
  for (int i = 0; i < k; ++i) g.add_vertex("c" + std::to_string(i));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  for (int i = 0; i < extra; ++i) {
    int v = g.add_vertex("i" + std::to_string(i));
    uint64_t mask = k >= 63 ? rng() : 1 + rng() % ((uint64_t{1} << k) - 1);
    for (int j = 0; j < k; ++j)
      if (mask >> j & 1) g.add_edge(v, j);
  }
  return g;
}

}  // namespace testsupport
