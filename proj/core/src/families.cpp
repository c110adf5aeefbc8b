#include "wordrep/families.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "wordrep/io.hpp"

namespace wordrep {

Graph generate_w(int i) {
  static const std::vector<std::vector<std::pair<int, int>>> edges = {
      // W1, the net: triangle 3-4-5 with pendants 1, 2, 6.
      {{1, 3}, {2, 4}, {3, 5}, {4, 5}, {5, 6}, {3, 4}},
      // W2: the 3-sun on clique {2,4,5}.
      {{1, 2}, {2, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {4, 5}, {4, 6}, {5, 6}},
      // W3: the net with two extra corner neighbors.
      {{1, 3}, {2, 4}, {3, 5}, {4, 5}, {5, 6}, {3, 4}, {3, 6}, {5, 7}, {4, 7}},
      // W4.
      {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}},
  };
  if (i < 1 || i > 4) fail("invalid-argument", "W index must be 1..4");
  int n = i <= 2 ? 6 : 7;
  Graph g;
  for (int v = 1; v <= n; ++v) g.add_vertex(std::to_string(v));
  for (auto [u, v] : edges[i - 1])
    g.add_edge(std::to_string(u), std::to_string(v));
  return g;
}

Graph generate_sun(int k) {
  if (k < 3) fail("invalid-argument", "suns need k >= 3");
  Graph g;
  for (int i = 1; i <= k; ++i) g.add_vertex("u" + std::to_string(i));
  for (int i = 1; i <= k; ++i) g.add_vertex("w" + std::to_string(i));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  for (int i = 0; i < k; ++i) {
    g.add_edge(k + i, i);
    g.add_edge(k + i, (i + 1) % k);
  }
  return g;
}

Graph generate_even_sun(int k) {
  if (k < 4 || k % 2 != 0)
    fail("invalid-argument", "even suns need an even k >= 4, got " + std::to_string(k));
  return generate_sun(k);
}

FamilySpec load_family_dir(const std::string& dir) {
  FamilySpec spec;
  std::string manifest_path = dir + "/manifest.txt";
  std::ifstream in(manifest_path);
  if (!in) fail("io", "cannot open family manifest '" + manifest_path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    std::string id, file;
    if (!(ls >> id)) continue;
    if (!(ls >> file))
      fail("format", "line " + std::to_string(line_no) + ": manifest entry '" + id +
                         "' names no file");
    FamilyMember member;
    member.id = id;
    member.graph = load_graph_file(dir + "/" + file);
    if (!member.graph.connected())
      fail("format", "family member '" + id + "' is not connected");
    spec.external.push_back(std::move(member));
  }
  spec.external_loaded = true;
  return spec;
}

namespace {

// Pattern vertices ordered for pruning: highest degree first, then most
// neighbors among already-ordered vertices, ties by index.
std::vector<int> pattern_order(const Graph& h) {
  int n = h.n();
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_anchor = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int anchor = 0;
      for (int u : order)
        if (h.adjacent(u, v)) ++anchor;
      if (anchor > best_anchor ||
          (anchor == best_anchor && h.degree(v) > best_deg)) {
        best = v;
        best_anchor = anchor;
        best_deg = h.degree(v);
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

class InducedSearch {
 public:
  InducedSearch(const Graph& g, const Graph& h) : g_(g), h_(h), order_(pattern_order(h)) {
    image_.assign(h.n(), -1);
    used_ = Bitset(g.n());
  }

  std::optional<std::vector<int>> run() {
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(size_t depth) {
    if (depth == order_.size()) return true;
    int pv = order_[depth];
    for (int cand = 0; cand < g_.n(); ++cand) {
      if (used_.test(cand)) continue;
      if (g_.degree(cand) < h_.degree(pv)) continue;
      bool ok = true;
      for (size_t d = 0; d < depth && ok; ++d) {
        int qu = order_[d];
        if (h_.adjacent(pv, qu) != g_.adjacent(cand, image_[qu])) ok = false;
      }
      if (!ok) continue;
      image_[pv] = cand;
      used_.set(cand);
      if (extend(depth + 1)) return true;
      used_.reset(cand);
      image_[pv] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> order_;
  std::vector<int> image_;
  Bitset used_;
};

}  // namespace

std::optional<Embedding> contains_induced(const Graph& g, const Graph& h,
                                          const InducedLimits& limits) {
  if (h.n() > limits.max_pattern)
    fail("oracle-bound", "induced-subgraph pattern capped at " +
                             std::to_string(limits.max_pattern) + " vertices");
  if (g.n() > limits.max_host)
    fail("oracle-bound",
         "induced-subgraph host capped at " + std::to_string(limits.max_host) + " vertices");
  if (h.n() > g.n() || h.m() > g.m()) return std::nullopt;
  InducedSearch search(g, h);
  auto image = search.run();
  if (!image) return std::nullopt;
  // Re-verify the witness: adjacency must match exactly on the image.
  for (int u = 0; u < h.n(); ++u)
    for (int v = u + 1; v < h.n(); ++v)
      if (h.adjacent(u, v) != g.adjacent((*image)[u], (*image)[v]))
        fail("structure", "induced-subgraph search produced a bad embedding");
  Embedding out;
  for (int v = 0; v < h.n(); ++v)
    out.emplace_back(h.name_of(v), g.name_of((*image)[v]));
  return out;
}

std::vector<FamilyHit> scan_c_family(const Graph& g, const FamilySpec& spec, int k_max,
                                     const InducedLimits& limits) {
  if (k_max < 4) fail("invalid-argument", "sun scan needs k_max >= 4");
  std::vector<FamilyHit> hits;
  int start = spec.include_odd_suns ? 3 : 4;
  int step = spec.include_odd_suns ? 1 : 2;
  for (int k = start; k <= k_max && 2 * k <= g.n(); k += step) {
    Graph sun = generate_sun(k);
    if (auto e = contains_induced(g, sun, limits)) {
      std::string id = (k % 2 == 0 ? "even-" : "") + std::to_string(k) + "-sun";
      hits.push_back({id, *e});
    }
  }
  for (const auto& member : spec.external) {
    if (member.graph.n() > g.n()) continue;
    if (auto e = contains_induced(g, member.graph, limits))
      hits.push_back({member.id, *e});
  }
  return hits;
}

std::vector<FamilyHit> scan_w_family(const Graph& g, const InducedLimits& limits) {
  std::vector<FamilyHit> hits;
  for (int i = 1; i <= 4; ++i) {
    Graph w = generate_w(i);
    if (w.n() > g.n()) continue;
    if (auto e = contains_induced(g, w, limits))
      hits.push_back({"W" + std::to_string(i), *e});
  }
  return hits;
}

}  // namespace wordrep
