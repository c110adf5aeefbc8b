#include "wordrep/orientation.hpp"

namespace wordrep {

namespace {

class OrientationSearch {
 public:
  explicit OrientationSearch(const Graph& g) : g_(g), n_(g.n()), edges_(g.edge_list()) {
    dir_.assign(edges_.size(), 0);
    edge_id_.assign(static_cast<size_t>(n_) * n_, -1);
    for (size_t e = 0; e < edges_.size(); ++e) {
      edge_id_[edges_[e].first * n_ + edges_[e].second] = static_cast<int>(e);
      edge_id_[edges_[e].second * n_ + edges_[e].first] = static_cast<int>(e);
    }
  }

  void enumerate(const std::function<bool(const std::vector<std::pair<int, int>>&)>& fn) {
    descend(fn);
  }

 private:
  // Returns false when the consumer asked to stop.
  bool descend(const std::function<bool(const std::vector<std::pair<int, int>>&)>& fn) {
    int e = next_unoriented();
    if (e == -1) {
      if (!verify_transitive()) return true;
      std::vector<std::pair<int, int>> oriented;
      oriented.reserve(edges_.size());
      for (size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        oriented.emplace_back(dir_[i] == 1 ? u : v, dir_[i] == 1 ? v : u);
      }
      return fn(oriented);
    }
    for (int d : {+1, -1}) {
      std::vector<int> touched;
      if (assign(e, d, touched)) {
        if (!descend(fn)) {
          undo(touched);
          return false;
        }
      }
      undo(touched);
    }
    return true;
  }

  int next_unoriented() const {
    for (size_t e = 0; e < dir_.size(); ++e)
      if (dir_[e] == 0) return static_cast<int>(e);
    return -1;
  }

  bool assign(int e, int d, std::vector<int>& touched) {
    std::vector<int> queue;
    if (!set_dir(e, d, touched, queue)) return false;
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      auto [u, v] = edges_[cur];
      int a = dir_[cur] == 1 ? u : v;
      int b = dir_[cur] == 1 ? v : u;
      for (int c = 0; c < n_; ++c) {
        if (c == a || c == b) continue;
        bool bc = g_.adjacent(b, c), ac = g_.adjacent(a, c);
        // Forcing around the shared endpoint of a non-edge.
        if (ac && !bc) {
          if (!force(a, c, touched, queue)) return false;
        }
        if (bc && !ac) {
          if (!mirror_about(b, a, c, touched, queue)) return false;
        }
        // Transitive completion.
        if (bc && oriented(b, c)) {
          if (!ac) return false;
          if (!force(a, c, touched, queue)) return false;
        }
        if (ac && oriented(c, a)) {
          if (!bc) return false;
          if (!force(c, b, touched, queue)) return false;
        }
      }
    }
    return true;
  }

  bool oriented(int from, int to) const {
    int e = edge_id_[from * n_ + to];
    if (e == -1 || dir_[e] == 0) return false;
    return dir_[e] == (edges_[e].first == from ? 1 : -1);
  }

  bool force(int from, int to, std::vector<int>& touched, std::vector<int>& queue) {
    int e = edge_id_[from * n_ + to];
    int want = edges_[e].first == from ? 1 : -1;
    if (dir_[e] == want) return true;
    if (dir_[e] == -want) return false;
    return set_dir(e, want, touched, queue);
  }

  // Edges (a,hub) and (c,hub) with a,c non-adjacent must agree about hub.
  bool mirror_about(int hub, int a, int c, std::vector<int>& touched,
                    std::vector<int>& queue) {
    if (oriented(a, hub)) return force(c, hub, touched, queue);
    return force(hub, c, touched, queue);
  }

  bool set_dir(int e, int d, std::vector<int>& touched, std::vector<int>& queue) {
    if (dir_[e] != 0) return dir_[e] == d;
    dir_[e] = static_cast<int8_t>(d);
    touched.push_back(e);
    queue.push_back(e);
    return true;
  }

  void undo(const std::vector<int>& touched) {
    for (int e : touched) dir_[e] = 0;
  }

  bool verify_transitive() const {
    for (size_t e = 0; e < edges_.size(); ++e) {
      auto [u, v] = edges_[e];
      int a = dir_[e] == 1 ? u : v;
      int b = dir_[e] == 1 ? v : u;
      for (int c = 0; c < n_; ++c) {
        if (c == a || c == b) continue;
        if (g_.adjacent(b, c) && oriented(b, c)) {
          if (!g_.adjacent(a, c) || !oriented(a, c)) return false;
        }
      }
    }
    return true;
  }

  const Graph& g_;
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int8_t> dir_;
  std::vector<int> edge_id_;
};

}  // namespace

void for_each_transitive_orientation(
    const Graph& g, const std::function<bool(const std::vector<std::pair<int, int>>&)>& fn) {
  OrientationSearch(g).enumerate(fn);
}

std::optional<std::vector<std::pair<int, int>>> find_transitive_orientation(const Graph& g) {
  std::optional<std::vector<std::pair<int, int>>> found;
  for_each_transitive_orientation(g, [&](const std::vector<std::pair<int, int>>& o) {
    found = o;
    return false;
  });
  return found;
}

}  // namespace wordrep
