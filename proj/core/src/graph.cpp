#include "wordrep/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wordrep {

int Graph::add_vertex(const std::string& name) {
  if (index_.count(name)) fail("invalid-argument", "duplicate vertex '" + name + "'");
  int idx = n();
  names_.push_back(name);
  index_[name] = idx;
  for (auto& row : adj_) row.resize(idx + 1);
  adj_.emplace_back(idx + 1);
  return idx;
}

int Graph::ensure_vertex(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  return add_vertex(name);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n() || v < 0 || v >= n())
    fail("unknown-vertex", "edge endpoint out of range");
  if (u == v) fail("invalid-edge", "self-loop at '" + names_[u] + "'");
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
}

void Graph::add_edge(const std::string& u, const std::string& v) {
  add_edge(index_of(u), index_of(v));
}

std::optional<int> Graph::find_vertex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail("unknown-vertex", "'" + name + "'");
  return it->second;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m_);
  for (int u = 0; u < n(); ++u) {
    for (int v = adj_[u].find_next(u); v != -1; v = adj_[u].find_next(v))
      edges.emplace_back(u, v);
  }
  return edges;
}

bool Graph::connected() const {
  if (n() <= 1) return true;
  Bitset seen(n());
  std::vector<int> stack{0};
  seen.set(0);
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    adj_[v].for_each([&](int w) {
      if (!seen.test(w)) {
        seen.set(w);
        ++reached;
        stack.push_back(w);
      }
    });
  }
  return reached == n();
}

Bitset vertex_set(const Graph& g, const std::vector<std::string>& names) {
  Bitset b(g.n());
  for (const auto& name : names) b.set(g.index_of(name));
  return b;
}

std::vector<std::string> set_names(const Graph& g, const Bitset& s) {
  std::vector<std::string> out;
  s.for_each([&](int i) { out.push_back(g.name_of(i)); });
  return out;
}

Bitset neighborhood(const Graph& g, int a) {
  if (a < 0 || a >= g.n()) fail("unknown-vertex", "vertex index out of range");
  return g.row(a);
}

Bitset neighborhood(const Graph& g, const std::string& a) {
  return neighborhood(g, g.index_of(a));
}

Bitset set_neighborhood(const Graph& g, const Bitset& a) {
  if (a.size() != g.n()) fail("not-subset", "vertex set does not belong to this graph");
  Bitset out(g.n());
  a.for_each([&](int v) { out |= g.row(v); });
  out -= a;
  return out;
}

Graph induced_subgraph(const Graph& g, const Bitset& a) {
  if (a.size() != g.n()) fail("not-subset", "vertex set does not belong to this graph");
  Graph h;
  std::vector<int> idx = a.to_indices();
  for (int v : idx) h.add_vertex(g.name_of(v));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j)
      if (g.adjacent(idx[i], idx[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

std::vector<std::pair<int, int>> bipartite_edges(const Graph& g, const Bitset& a,
                                                 const Bitset& b) {
  if (a.size() != g.n() || b.size() != g.n())
    fail("not-subset", "vertex set does not belong to this graph");
  if (a.intersects(b)) fail("overlap", "sides of a bipartite query must be disjoint");
  std::vector<std::pair<int, int>> out;
  a.for_each([&](int u) {
    Bitset nb = g.row(u) & b;
    nb.for_each([&](int v) { out.emplace_back(u, v); });
  });
  return out;
}

bool is_complete_to(const Graph& g, const Bitset& a, const Bitset& b) {
  if (a.size() != g.n() || b.size() != g.n())
    fail("not-subset", "vertex set does not belong to this graph");
  if (a.intersects(b)) return false;
  bool ok = true;
  a.for_each([&](int u) {
    if (!b.is_subset_of(g.row(u))) ok = false;
  });
  return ok;
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Clique: return "clique";
    case Shape::Star: return "star";
    case Shape::Prime: return "prime";
    case Shape::Other: return "other";
  }
  return "?";
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out;
  for (const auto& name : a.vertex_names()) out.add_vertex(name);
  std::vector<int> remap(b.n());
  for (int v = 0; v < b.n(); ++v) {
    std::string name = b.name_of(v);
    while (out.has_vertex(name)) name += "'";
    remap[v] = out.add_vertex(name);
  }
  for (auto [u, v] : a.edge_list()) out.add_edge(u, v);
  for (auto [u, v] : b.edge_list()) out.add_edge(remap[u], remap[v]);
  return out;
}

bool same_labeled_graph(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  std::set<std::string> va(a.vertex_names().begin(), a.vertex_names().end());
  std::set<std::string> vb(b.vertex_names().begin(), b.vertex_names().end());
  if (va != vb) return false;
  std::set<std::pair<std::string, std::string>> ea, eb;
  for (auto [u, v] : a.edge_list()) {
    auto p = std::minmax(a.name_of(u), a.name_of(v));
    ea.emplace(p.first, p.second);
  }
  for (auto [u, v] : b.edge_list()) {
    auto p = std::minmax(b.name_of(u), b.name_of(v));
    eb.emplace(p.first, p.second);
  }
  return ea == eb;
}

Graph canonical_copy(const Graph& g) {
  std::vector<std::string> names = g.vertex_names();
  std::sort(names.begin(), names.end());
  Graph out;
  for (const auto& name : names) out.add_vertex(name);
  for (auto [u, v] : g.edge_list()) out.add_edge(g.name_of(u), g.name_of(v));
  return out;
}

}  // namespace wordrep
