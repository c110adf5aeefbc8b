#include "wordrep/wpc.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace wordrep {

namespace {

std::string bag_label(int i) { return "bag " + std::to_string(i); }

struct ResolvedTree {
  std::vector<Bitset> bags;
  std::vector<std::vector<int>> adj;  // bag adjacency lists
};

// Well-formedness shared by verify and boundary: bags partition V and the
// tree edges form a tree over the bags. Returns the failure detail.
std::optional<std::string> resolve(const Graph& g, const PartitionTree& t,
                                   ResolvedTree& out) {
  int b = static_cast<int>(t.bags.size());
  if (b == 0) return "partition has no bags";
  out.bags.assign(b, Bitset(g.n()));
  Bitset covered(g.n());
  for (int i = 0; i < b; ++i) {
    if (t.bags[i].empty()) return bag_label(i) + " is empty";
    for (const auto& name : t.bags[i]) {
      auto v = g.find_vertex(name);
      if (!v) return bag_label(i) + " names unknown vertex '" + name + "'";
      if (covered.test(*v)) return "vertex '" + name + "' appears in two bags";
      covered.set(*v);
      out.bags[i].set(*v);
    }
  }
  if (covered.count() != g.n()) return "bags do not cover every vertex";
  if (static_cast<int>(t.tree_edges.size()) != b - 1)
    return "a tree on " + std::to_string(b) + " bags needs exactly " +
           std::to_string(b - 1) + " edges";
  out.adj.assign(b, {});
  std::vector<int> parent(b);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [x, y] : t.tree_edges) {
    if (x < 0 || x >= b || y < 0 || y >= b) return "tree edge references a missing bag";
    if (x == y) return "tree edge loops on " + bag_label(x);
    int rx = find(x), ry = find(y);
    if (rx == ry) return "tree edges contain a cycle";
    parent[rx] = ry;
    out.adj[x].push_back(y);
    out.adj[y].push_back(x);
  }
  return std::nullopt;
}

}  // namespace

TreeReport verify_partition_tree(const Graph& g, const PartitionTree& t) {
  TreeReport report;
  ResolvedTree rt;
  if (auto bad = resolve(g, t, rt)) {
    report.condition = "wellformed";
    report.detail = *bad;
    return report;
  }
  int b = static_cast<int>(t.bags.size());
  for (int i = 0; i < b; ++i) {
    bool clique = true;
    rt.bags[i].for_each([&](int u) {
      Bitset missing = rt.bags[i];
      missing.reset(u);
      missing -= g.row(u);
      if (missing.any()) clique = false;
    });
    if (!clique) {
      report.condition = "bag-clique";
      report.detail = bag_label(i) + " does not induce a clique";
      return report;
    }
  }
  std::set<std::pair<int, int>> adjacent;
  for (auto [x, y] : t.tree_edges)
    adjacent.insert({std::min(x, y), std::max(x, y)});
  for (int i = 0; i < b; ++i) {
    for (int j = i + 1; j < b; ++j) {
      // Cross edges between the two bags.
      Bitset bd_i(g.n()), bd_j(g.n());
      rt.bags[i].for_each([&](int u) {
        if (g.row(u).intersects(rt.bags[j])) bd_i.set(u);
      });
      rt.bags[j].for_each([&](int u) {
        if (g.row(u).intersects(rt.bags[i])) bd_j.set(u);
      });
      if (adjacent.count({i, j})) {
        bool product = true;
        bd_i.for_each([&](int u) {
          Bitset seen = g.row(u);
          seen &= rt.bags[j];
          if (!(seen == bd_j)) product = false;
        });
        if (!product) {
          report.condition = "adjacent-product";
          report.detail = "edges between " + bag_label(i) + " and " + bag_label(j) +
                          " are not a complete bipartite product";
          return report;
        }
      } else if (bd_i.any()) {
        report.condition = "nonadjacent-empty";
        report.detail = "edges exist between non-adjacent " + bag_label(i) + " and " +
                        bag_label(j);
        return report;
      }
    }
  }
  report.ok = true;
  return report;
}

Bitset boundary(const Graph& g, const PartitionTree& t, int bag_a, int bag_b) {
  ResolvedTree rt;
  if (auto bad = resolve(g, t, rt)) fail("invalid-argument", *bad);
  int b = static_cast<int>(t.bags.size());
  if (bag_a < 0 || bag_a >= b || bag_b < 0 || bag_b >= b)
    fail("invalid-argument", "bag index out of range");
  bool adj = false;
  for (auto [x, y] : t.tree_edges)
    if ((x == bag_a && y == bag_b) || (x == bag_b && y == bag_a)) adj = true;
  if (!adj)
    fail("invalid-argument",
         "boundary is defined for tree-adjacent bags, " + bag_label(bag_a) + " and " +
             bag_label(bag_b) + " are not");
  Bitset out(g.n());
  rt.bags[bag_a].for_each([&](int u) {
    if (g.row(u).intersects(rt.bags[bag_b])) out.set(u);
  });
  return out;
}

bool is_star_partition_tree(const PartitionTree& t) {
  int b = static_cast<int>(t.bags.size());
  if (b == 1) return true;  // degenerate star
  for (int center = 0; center < b; ++center) {
    bool ok = true;
    for (auto [x, y] : t.tree_edges)
      if (x != center && y != center) ok = false;
    for (int i = 0; i < b && ok; ++i)
      if (i != center && t.bags[i].size() != 1) ok = false;
    if (ok && static_cast<int>(t.tree_edges.size()) == b - 1) return true;
  }
  return false;
}

CertifiedGraph expand_partition_tree(const TreeSpec& spec) {
  int b = static_cast<int>(spec.bag_sizes.size());
  if (b == 0) fail("invalid-argument", "spec has no bags");
  for (int i = 0; i < b; ++i)
    if (spec.bag_sizes[i] < 1)
      fail("invalid-argument", bag_label(i) + " has size below one");
  if (static_cast<int>(spec.edges.size()) != b - 1)
    fail("invalid-argument", "spec edges do not form a tree (wrong count)");

  CertifiedGraph out;
  std::vector<std::vector<int>> members(b);
  for (int i = 0; i < b; ++i) {
    std::vector<std::string> bag;
    for (int j = 0; j < spec.bag_sizes[i]; ++j) {
      std::string name = "b" + std::to_string(i) + "_" + std::to_string(j);
      members[i].push_back(out.graph.add_vertex(name));
      bag.push_back(name);
    }
    for (size_t x = 0; x < members[i].size(); ++x)
      for (size_t y = x + 1; y < members[i].size(); ++y)
        out.graph.add_edge(members[i][x], members[i][y]);
    out.tree.bags.push_back(std::move(bag));
  }
  std::vector<int> parent(b);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : spec.edges) {
    if (e.bag_a < 0 || e.bag_a >= b || e.bag_b < 0 || e.bag_b >= b || e.bag_a == e.bag_b)
      fail("invalid-argument", "spec edge references bad bags");
    int ra = find(e.bag_a), rb = find(e.bag_b);
    if (ra == rb) fail("invalid-argument", "spec edges contain a cycle");
    parent[ra] = rb;
    if (e.boundary_a.empty() || e.boundary_b.empty())
      fail("invalid-argument", "boundaries must be non-empty per tree edge");
    for (int idx : e.boundary_a)
      if (idx < 0 || idx >= spec.bag_sizes[e.bag_a])
        fail("invalid-argument", "boundary index out of range in " + bag_label(e.bag_a));
    for (int idx : e.boundary_b)
      if (idx < 0 || idx >= spec.bag_sizes[e.bag_b])
        fail("invalid-argument", "boundary index out of range in " + bag_label(e.bag_b));
    for (int x : e.boundary_a)
      for (int y : e.boundary_b)
        out.graph.add_edge(members[e.bag_a][x], members[e.bag_b][y]);
    out.tree.tree_edges.emplace_back(e.bag_a, e.bag_b);
  }
  return out;
}

namespace {

// Rejection-sampled bounded draw, pinned independently of the standard
// library's distribution implementations.
uint64_t draw_below(std::mt19937_64& rng, uint64_t bound) {
  if (bound <= 1) return 0;
  uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

CertifiedGraph random_partition_tree(const RandomTreeParams& params, uint64_t seed) {
  if (params.min_bags < 1 || params.max_bags < params.min_bags)
    fail("invalid-argument", "bad bag-count range");
  if (params.max_bag_size < 1 || params.max_bag_size > 62)
    fail("invalid-argument", "bag sizes must lie in 1..62");
  std::mt19937_64 rng(seed);
  int b = params.min_bags +
          static_cast<int>(draw_below(rng, params.max_bags - params.min_bags + 1));
  TreeSpec spec;
  int budget = std::max(params.max_vertices, b);  // at least one vertex per bag
  for (int i = 0; i < b; ++i) {
    int reserve = b - i - 1;
    int cap = std::min(params.max_bag_size, budget - reserve);
    cap = std::max(cap, 1);
    int size = 1 + static_cast<int>(draw_below(rng, cap));
    budget -= size;
    spec.bag_sizes.push_back(size);
  }
  for (int i = 1; i < b; ++i) {
    TreeSpecEdge e;
    e.bag_a = static_cast<int>(draw_below(rng, i));
    e.bag_b = i;
    uint64_t sa = spec.bag_sizes[e.bag_a], sb = spec.bag_sizes[e.bag_b];
    uint64_t mask_a = 1 + draw_below(rng, (uint64_t{1} << sa) - 1);
    uint64_t mask_b = 1 + draw_below(rng, (uint64_t{1} << sb) - 1);
    for (uint64_t j = 0; j < sa; ++j)
      if (mask_a >> j & 1) e.boundary_a.push_back(static_cast<int>(j));
    for (uint64_t j = 0; j < sb; ++j)
      if (mask_b >> j & 1) e.boundary_b.push_back(static_cast<int>(j));
    spec.edges.push_back(std::move(e));
  }
  return expand_partition_tree(spec);
}

namespace {

std::vector<int> lex_bfs_order(const Graph& g) {
  std::vector<std::vector<int>> buckets;
  std::vector<int> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  buckets.push_back(std::move(all));
  std::vector<int> order;
  order.reserve(g.n());
  while (!buckets.empty()) {
    int v = buckets.front().front();
    order.push_back(v);
    std::vector<std::vector<int>> next;
    for (auto& bucket : buckets) {
      std::vector<int> hit, miss;
      for (int u : bucket) {
        if (u == v) continue;
        (g.adjacent(v, u) ? hit : miss).push_back(u);
      }
      if (!hit.empty()) next.push_back(std::move(hit));
      if (!miss.empty()) next.push_back(std::move(miss));
    }
    buckets = std::move(next);
  }
  return order;
}

}  // namespace

std::optional<ChordalityWitness> chordality_witness(const Graph& g) {
  if (g.n() <= 2) return std::nullopt;
  std::vector<int> order = lex_bfs_order(g);
  std::reverse(order.begin(), order.end());  // candidate elimination order
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  for (int i = 0; i < g.n(); ++i) {
    int v = order[i];
    // Neighbors later in the elimination order.
    Bitset later(g.n());
    g.row(v).for_each([&](int u) {
      if (pos[u] > i) later.set(u);
    });
    if (later.count() <= 1) continue;
    int first = -1, best = g.n() + 1;
    later.for_each([&](int u) {
      if (pos[u] < best) {
        best = pos[u];
        first = u;
      }
    });
    Bitset rest = later;
    rest.reset(first);
    rest -= g.row(first);
    if (rest.any()) {
      ChordalityWitness w;
      w.pivot = g.name_of(v);
      w.u = g.name_of(first);
      w.w = g.name_of(rest.find_first());
      return w;
    }
  }
  return std::nullopt;
}

bool is_chordal(const Graph& g) { return !chordality_witness(g).has_value(); }

}  // namespace wordrep
