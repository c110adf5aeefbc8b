#pragma once

// Independent brute-force oracles used to ground-truth the library
// implementations. These deliberately avoid the library's search code:
// splits are found by bipartition enumeration, minimality by exhaustive
// decomposition, labelings by full permutation enumeration, orientations
// by trying all edge directions.

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/split_decomposition.hpp"
#include "wordrep/split_wordrep.hpp"

namespace testsupport {

using wordrep::Bitset;
using wordrep::Graph;

// Direct definition check, loop-based on purpose.
inline bool brute_is_split(const Graph& g, const Bitset& v1) {
  int n = g.n();
  int s1 = v1.count();
  if (s1 < 2 || n - s1 < 2) return false;
  std::vector<int> nb1, nb2;
  for (int v = 0; v < n; ++v) {
    bool cross = false;
    for (int u = 0; u < n; ++u)
      if (g.adjacent(u, v) && v1.test(u) != v1.test(v)) cross = true;
    if (!cross) continue;
    (v1.test(v) ? nb1 : nb2).push_back(v);
  }
  for (int a : nb1)
    for (int b : nb2)
      if (!g.adjacent(a, b)) return false;
  return true;
}

// All splits by bipartition enumeration (vertex 0 pinned to side 1).
inline std::vector<Bitset> brute_all_splits(const Graph& g) {
  std::vector<Bitset> out;
  int n = g.n();
  if (n < 4 || n > 20) return out;
  for (uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    Bitset side(n);
    side.set(0);
    for (int v = 1; v < n; ++v)
      if (mask >> (v - 1) & 1) side.set(v);
    if (brute_is_split(g, side)) out.push_back(side);
  }
  return out;
}

inline bool brute_has_split(const Graph& g) { return !brute_all_splits(g).empty(); }

inline bool brute_is_clique(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != g.n() - 1) return false;
  return true;
}

inline bool brute_is_star(const Graph& g) {
  if (g.n() < 3) return false;
  int centers = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == g.n() - 1)
      ++centers;
    else if (g.degree(v) != 1)
      return false;
  }
  return centers == 1;
}

// Isomorphism-canonical adjacency string by brute permutation (n <= 8).
inline std::string canonical_form(const Graph& g) {
  int n = g.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string cur(static_cast<size_t>(n) * n, '0');
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (g.adjacent(perm[i], perm[j])) cur[i * n + j] = '1';
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

// Minimum number of terminal components over every possible split
// decomposition whose pieces are cliques, stars or prime graphs.
class MinDecompositionOracle {
 public:
  int min_components(const Graph& g) {
    std::string key = canonical_form(g);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int best = std::numeric_limits<int>::max();
    if (brute_is_clique(g) || brute_is_star(g) || !brute_has_split(g)) best = 1;
    for (const Bitset& side : brute_all_splits(g)) {
      Graph c1 = component_of(g, side);
      Graph c2 = component_of(g, side.complement());
      int sub = min_components(c1) + min_components(c2);
      best = std::min(best, sub);
    }
    memo_[key] = best;
    return best;
  }

 private:
  static Graph component_of(const Graph& g, const Bitset& side) {
    Graph h = induced_subgraph(g, side);
    int marker = h.add_vertex("$oracle");
    Bitset attach = set_neighborhood(g, side.complement());
    attach.for_each([&](int v) { h.add_edge(h.index_of(g.name_of(v)), marker); });
    return h;
  }

  std::map<std::string, int> memo_;
};

// Exhaustive labeling decision: tries every bijection clique -> 1..k.
inline bool brute_labeling_exists(const Graph& g, const wordrep::SplitPartition& p) {
  std::vector<int> clique = p.clique.to_indices();
  std::sort(clique.begin(), clique.end());
  do {
    std::map<std::string, int> labels;
    for (size_t i = 0; i < clique.size(); ++i)
      labels[g.name_of(clique[i])] = static_cast<int>(i) + 1;
    if (wordrep::validate_labeling(g, p, labels).ok) return true;
  } while (std::next_permutation(clique.begin(), clique.end()));
  return clique.empty();  // k == 0: the empty labeling is valid
}

// Exhaustive transitive-orientation decision over all 2^m orientations.
inline bool brute_orientation_exists(const Graph& g) {
  auto edges = g.edge_list();
  size_t m = edges.size();
  if (m > 22) return false;  // guard; callers keep m small
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::vector<bool>> dir(g.n(), std::vector<bool>(g.n(), false));
    for (size_t e = 0; e < m; ++e) {
      auto [u, v] = edges[e];
      if (mask >> e & 1)
        dir[u][v] = true;
      else
        dir[v][u] = true;
    }
    bool transitive = true;
    for (int a = 0; a < g.n() && transitive; ++a)
      for (int b = 0; b < g.n() && transitive; ++b)
        for (int c = 0; c < g.n() && transitive; ++c) {
          if (a == b || b == c || a == c) continue;
          if (dir[a][b] && dir[b][c] && !dir[a][c]) transitive = false;
        }
    if (transitive) return true;
  }
  return false;
}

// Signature of a decomposition for uniqueness checks: per component the
// kind and the sorted original (non-marker) labels, sorted overall.
inline std::string decomposition_signature(const wordrep::DecompositionTree& t) {
  std::vector<std::string> sigs;
  for (size_t i = 0; i < t.components.size(); ++i) {
    std::string s = std::string(wordrep::component_kind_name(t.kinds[i])) + ":";
    std::vector<std::string> originals;
    for (const auto& name : t.components[i].vertex_names())
      if (name.rfind("$m", 0) != 0) originals.push_back(name);
    std::sort(originals.begin(), originals.end());
    for (const auto& name : originals) s += name + ",";
    sigs.push_back(s);
  }
  std::sort(sigs.begin(), sigs.end());
  std::string out;
  for (const auto& s : sigs) out += s + ";";
  out += "edges=" + std::to_string(t.marker_edges.size());
  return out;
}

}  // namespace testsupport
