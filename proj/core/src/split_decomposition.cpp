#include "wordrep/split_decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace wordrep {

namespace {

bool is_complete_graph(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != g.n() - 1) return false;
  return true;
}

// K_{1,t} with t >= 2. K2 is treated as a clique, not a star.
bool is_star_graph(const Graph& g) {
  if (g.n() < 3) return false;
  int centers = 0, leaves = 0;
  for (int v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    if (d == g.n() - 1)
      ++centers;
    else if (d == 1)
      ++leaves;
    else
      return false;
  }
  return centers == 1 && leaves == g.n() - 1;
}

int star_center(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == g.n() - 1) return v;
  fail("structure", "star component without a center");
}

// Minimal closure of {u, z} under the forced-move rules for a split with
// u on side 1 and v pinned on side 2 (u adjacent to v). Returns false
// when the closure exceeds n-2 vertices, i.e. side 2 would shrink below
// two. The rules, for each vertex a absorbed into side 1:
//   - a not adjacent to v: a cannot carry cross edges, so absorb all of
//     N(a) outside side 1;
//   - a adjacent to v: cross neighbors of a must lie in N(u), so absorb
//     N(a) \ N(u); and every cross neighbor of u must see a, so absorb
//     N(u) \ N(a).
// A fixpoint with both sides of size two or more is exactly a split.
bool split_closure(const Graph& g, int u, int z, int v, Bitset& side1) {
  const int n = g.n();
  const int limit = n - 2;
  side1 = Bitset(n);
  int size = 0;
  bool overflow = false;
  std::vector<int> work;
  auto absorb = [&](int w) {
    if (side1.test(w)) return;
    side1.set(w);
    if (++size > limit) overflow = true;
    work.push_back(w);
  };
  absorb(u);
  absorb(z);
  const Bitset& nu = g.row(u);
  const Bitset& nv = g.row(v);
  while (!work.empty() && !overflow) {
    int a = work.back();
    work.pop_back();
    Bitset pending = g.row(a);
    pending -= side1;
    if (nv.test(a)) {
      pending -= nu;
      Bitset require = nu;
      require -= side1;
      require -= g.row(a);
      pending |= require;
    }
    pending.for_each(absorb);
  }
  return !overflow;
}

std::optional<Split> find_split_unchecked(const Graph& g) {
  const int n = g.n();
  if (n < 4) return std::nullopt;
  Bitset side1(n);
  for (int u = 0; u < n; ++u) {
    const Bitset& nbrs = g.row(u);
    for (int v = nbrs.find_first(); v != -1; v = nbrs.find_next(v)) {
      for (int z = 0; z < n; ++z) {
        if (z == u || z == v) continue;
        if (split_closure(g, u, z, v, side1)) {
          Split s;
          s.side1 = side1;
          s.side2 = side1.complement();
          return s;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_split(const Graph& g, const Bitset& v1, const Bitset& v2) {
  if (!g.connected()) fail("disconnected", "splits are defined on connected graphs");
  if (v1.size() != g.n() || v2.size() != g.n())
    fail("not-subset", "vertex set does not belong to this graph");
  if (v1.intersects(v2)) return false;
  if ((v1 | v2) != Bitset::full(g.n())) return false;
  if (v1.count() < 2 || v2.count() < 2) return false;
  Bitset n1 = set_neighborhood(g, v1);
  Bitset n2 = set_neighborhood(g, v2);
  return is_complete_to(g, n1, n2);
}

std::optional<Split> find_split(const Graph& g) {
  if (!g.connected()) fail("disconnected", "splits are defined on connected graphs");
  return find_split_unchecked(g);
}

const char* component_kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::Clique: return "clique";
    case ComponentKind::Star: return "star";
    case ComponentKind::Prime: return "prime";
  }
  return "?";
}

Shape classify_shape(const Graph& g) {
  if (!g.connected()) fail("disconnected", "shape classification requires a connected graph");
  if (is_complete_graph(g)) return Shape::Clique;
  if (is_star_graph(g)) return Shape::Star;
  // Connected graphs on at most three vertices are cliques or stars.
  return find_split_unchecked(g) ? Shape::Other : Shape::Prime;
}

namespace {

ComponentKind kind_of_terminal(const Graph& g) {
  if (is_complete_graph(g)) return ComponentKind::Clique;
  if (is_star_graph(g)) return ComponentKind::Star;
  return ComponentKind::Prime;
}

class Decomposer {
 public:
  Decomposer(const Graph& g, std::vector<Bitset> hints)
      : original_(g), hints_(std::move(hints)) {}

  DecompositionTree run() {
    if (!original_.connected())
      fail("disconnected", "split decomposition requires a connected graph");
    std::vector<int> alive(hints_.size());
    for (size_t i = 0; i < hints_.size(); ++i) alive[i] = static_cast<int>(i);
    recurse(original_, alive);

    DecompositionTree t;
    t.components = std::move(components_);
    for (const auto& c : t.components) t.kinds.push_back(kind_of_terminal(c));
    std::unordered_map<std::string, int> home;
    for (int i = 0; i < static_cast<int>(t.components.size()); ++i)
      for (const auto& name : t.components[i].vertex_names())
        home[name] = i;
    for (const auto& [m1, m2] : pending_) {
      t.marker_edges.push_back({{home.at(m1), m1}, {home.at(m2), m2}});
    }
    return t;
  }

 private:
  std::string fresh_marker() {
    std::string name;
    do {
      name = "$m" + std::to_string(++marker_counter_);
    } while (original_.has_vertex(name));
    return name;
  }

  // Resolves a hint (an index set over the original graph) against a
  // component: original vertices follow the hint, markers follow their
  // neighbors (unresolved markers stay on side 2). Returns false when
  // the resolved bipartition is not a usable split here.
  bool resolve_hint(const Graph& comp, const Bitset& hint, Bitset& side1) {
    int cn = comp.n();
    side1 = Bitset(cn);
    Bitset unresolved(cn);
    for (int i = 0; i < cn; ++i) {
      auto orig = original_.find_vertex(comp.name_of(i));
      if (!orig)
        unresolved.set(i);
      else if (hint.test(*orig))
        side1.set(i);
    }
    // First by original neighbors, then by already-settled markers.
    for (int round = 0; round < 2; ++round) {
      unresolved.for_each([&](int m) {
        if (comp.row(m).intersects(side1)) {
          side1.set(m);
          unresolved.reset(m);
        }
      });
    }
    int s1 = side1.count();
    if (s1 < 2 || cn - s1 < 2) return false;
    Bitset side2 = side1.complement();
    Bitset n1 = set_neighborhood(comp, side1);
    Bitset n2 = set_neighborhood(comp, side2);
    return is_complete_to(comp, n1, n2);
  }

  void recurse(const Graph& comp, const std::vector<int>& alive) {
    std::optional<Split> split;
    std::vector<int> remaining = alive;
    if (comp.n() >= 4) {
      std::vector<int> keep;
      for (size_t i = 0; i < remaining.size() && !split; ++i) {
        Bitset side1;
        if (resolve_hint(comp, hints_[remaining[i]], side1)) {
          Split s;
          s.side1 = side1;
          s.side2 = side1.complement();
          split = s;
          keep.insert(keep.end(), remaining.begin() + i + 1, remaining.end());
        }
      }
      if (split)
        remaining = std::move(keep);
      else
        remaining.clear();
      if (!split) split = find_split_unchecked(comp);
    }
    if (!split) {
      components_.push_back(comp);
      return;
    }
    Bitset b1 = set_neighborhood(comp, split->side2);  // attachment inside side 1
    Bitset b2 = set_neighborhood(comp, split->side1);  // attachment inside side 2
    std::string m1 = fresh_marker();
    std::string m2 = fresh_marker();
    pending_.push_back({m1, m2});
    recurse(attach_marker(comp, split->side1, b1, m1), remaining);
    recurse(attach_marker(comp, split->side2, b2, m2), remaining);
  }

  static Graph attach_marker(const Graph& comp, const Bitset& side, const Bitset& attach,
                             const std::string& marker) {
    Graph h;
    std::vector<int> idx = side.to_indices();
    for (int v : idx) h.add_vertex(comp.name_of(v));
    int mv = h.add_vertex(marker);
    for (size_t i = 0; i < idx.size(); ++i) {
      for (size_t j = i + 1; j < idx.size(); ++j)
        if (comp.adjacent(idx[i], idx[j]))
          h.add_edge(static_cast<int>(i), static_cast<int>(j));
      if (attach.test(idx[i])) h.add_edge(static_cast<int>(i), mv);
    }
    return h;
  }

  const Graph& original_;
  std::vector<Bitset> hints_;
  int marker_counter_ = 0;
  std::vector<Graph> components_;
  std::vector<std::pair<std::string, std::string>> pending_;
};

}  // namespace

DecompositionTree decompose(const Graph& g) { return Decomposer(g, {}).run(); }

DecompositionTree decompose_with_hints(const Graph& g, const std::vector<Bitset>& hints) {
  return Decomposer(g, hints).run();
}

void validate_tree(const DecompositionTree& t) {
  if (t.components.size() != t.kinds.size())
    fail("structure", "component and kind counts differ");
  std::map<std::string, int> marker_uses;
  for (const auto& [e1, e2] : t.marker_edges) {
    for (const auto& end : {e1, e2}) {
      if (end.component < 0 || end.component >= static_cast<int>(t.components.size()))
        fail("structure", "marker edge references missing component");
      if (!t.components[end.component].has_vertex(end.marker))
        fail("structure", "marker '" + end.marker + "' missing from its component");
      if (++marker_uses[end.marker] > 1)
        fail("structure", "marker '" + end.marker + "' used twice");
    }
  }
}

namespace {

// Merges component j into component i across the marker pair (u in i,
// v in j): drop the markers and join their attachments completely.
Graph merge_components(const Graph& ci, const std::string& u, const Graph& cj,
                       const std::string& v) {
  int ui = ci.index_of(u), vj = cj.index_of(v);
  Graph h;
  std::vector<int> map_i(ci.n(), -1), map_j(cj.n(), -1);
  for (int x = 0; x < ci.n(); ++x)
    if (x != ui) map_i[x] = h.add_vertex(ci.name_of(x));
  for (int x = 0; x < cj.n(); ++x)
    if (x != vj) map_j[x] = h.add_vertex(cj.name_of(x));
  for (auto [a, b] : ci.edge_list())
    if (a != ui && b != ui) h.add_edge(map_i[a], map_i[b]);
  for (auto [a, b] : cj.edge_list())
    if (a != vj && b != vj) h.add_edge(map_j[a], map_j[b]);
  ci.row(ui).for_each([&](int a) {
    cj.row(vj).for_each([&](int b) { h.add_edge(map_i[a], map_j[b]); });
  });
  return h;
}

bool mergeable(const DecompositionTree& t, const MarkerEnd& e1, const MarkerEnd& e2) {
  ComponentKind k1 = t.kinds[e1.component], k2 = t.kinds[e2.component];
  if (k1 == ComponentKind::Clique && k2 == ComponentKind::Clique) return true;
  if (k1 != ComponentKind::Star || k2 != ComponentKind::Star) return false;
  const Graph& c1 = t.components[e1.component];
  const Graph& c2 = t.components[e2.component];
  bool u_center = star_center(c1) == c1.index_of(e1.marker);
  bool v_center = star_center(c2) == c2.index_of(e2.marker);
  return u_center != v_center;  // leaf marker against center marker
}

}  // namespace

DecompositionTree minimalize(DecompositionTree t) {
  validate_tree(t);
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t e = 0; e < t.marker_edges.size(); ++e) {
      auto [e1, e2] = t.marker_edges[e];
      if (e1.component == e2.component)
        fail("structure", "marker edge inside a single component");
      if (!mergeable(t, e1, e2)) continue;
      int keep = e1.component, drop = e2.component;
      Graph mergedg = merge_components(t.components[keep], e1.marker,
                                       t.components[drop], e2.marker);
      ComponentKind kind = t.kinds[keep];  // clique+clique or star+star
      t.components[keep] = std::move(mergedg);
      t.kinds[keep] = kind;
      t.marker_edges.erase(t.marker_edges.begin() + e);
      for (auto& [a, b] : t.marker_edges) {
        for (auto* end : {&a, &b}) {
          if (end->component == drop) end->component = keep;
          if (end->component > drop) --end->component;
        }
      }
      t.components.erase(t.components.begin() + drop);
      t.kinds.erase(t.kinds.begin() + drop);
      merged = true;
      break;
    }
  }
  return t;
}

Graph recompose(const DecompositionTree& t) {
  validate_tree(t);
  if (t.components.empty()) fail("structure", "empty decomposition");
  // Collect marker names; they must all be consumed by contractions.
  std::set<std::string> markers;
  for (const auto& [e1, e2] : t.marker_edges) {
    markers.insert(e1.marker);
    markers.insert(e2.marker);
  }
  std::vector<Graph> comps = t.components;
  std::vector<std::pair<MarkerEnd, MarkerEnd>> edges = t.marker_edges;
  while (!edges.empty()) {
    auto [e1, e2] = edges.front();
    edges.erase(edges.begin());
    if (e1.component == e2.component)
      fail("structure", "marker edge inside a single component");
    const Graph& ci = comps[e1.component];
    const Graph& cj = comps[e2.component];
    if (ci.row(ci.index_of(e1.marker)).none() || cj.row(cj.index_of(e2.marker)).none())
      fail("structure", "marker '" + e1.marker + "'/'" + e2.marker +
                            "' has an empty attachment");
    Graph mergedg = merge_components(ci, e1.marker, cj, e2.marker);
    int keep = e1.component, drop = e2.component;
    comps[keep] = std::move(mergedg);
    for (auto& [a, b] : edges) {
      for (auto* end : {&a, &b}) {
        if (end->component == drop) end->component = keep;
        if (end->component > drop) --end->component;
      }
    }
    comps.erase(comps.begin() + drop);
  }
  if (comps.size() != 1)
    fail("structure", "decomposition is not connected by marker edges");
  for (const auto& name : comps[0].vertex_names())
    if (markers.count(name))
      fail("structure", "dangling marker '" + name + "' after recomposition");
  return comps[0];
}

}  // namespace wordrep
