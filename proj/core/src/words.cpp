#include "wordrep/words.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "wordrep/orientation.hpp"

namespace wordrep {

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) w.letters.push_back(tok);
  return w;
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += w.letters[i];
  }
  return out;
}

Word restrict_to(const Word& w, const std::set<std::string>& y) {
  Word out;
  for (const auto& l : w.letters)
    if (y.count(l)) out.letters.push_back(l);
  return out;
}

bool is_subword(const Word& u, const Word& w) {
  size_t i = 0;
  for (size_t j = 0; j < w.letters.size() && i < u.letters.size(); ++j)
    if (w.letters[j] == u.letters[i]) ++i;
  return i == u.letters.size();
}

bool alternates(const Word& w, const std::string& a, const std::string& b) {
  if (a == b) fail("invalid-argument", "alternation needs two distinct letters");
  const std::string* prev = nullptr;
  for (const auto& l : w.letters) {
    if (l != a && l != b) continue;
    if (prev && *prev == l) return false;
    prev = &l;
  }
  return true;
}

Graph graph_of_word(const Word& w) {
  Graph g;
  for (const auto& l : w.letters) g.ensure_vertex(l);
  // Positions of each letter in alphabet order of first appearance.
  int n = g.n();
  std::vector<std::vector<int>> pos(n);
  for (size_t p = 0; p < w.letters.size(); ++p)
    pos[g.index_of(w.letters[p])].push_back(static_cast<int>(p));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      // Merge the two position lists and check strict alternation.
      size_t i = 0, j = 0;
      int prev = -1;  // -1 none, 0 a, 1 b
      bool alt = true;
      while (alt && (i < pos[a].size() || j < pos[b].size())) {
        int cur;
        if (j >= pos[b].size() || (i < pos[a].size() && pos[a][i] < pos[b][j])) {
          cur = 0;
          ++i;
        } else {
          cur = 1;
          ++j;
        }
        if (cur == prev) alt = false;
        prev = cur;
      }
      if (alt) g.add_edge(a, b);
    }
  }
  return g;
}

bool represents(const Word& w, const Graph& g) {
  std::set<std::string> alpha = w.alphabet();
  std::set<std::string> verts(g.vertex_names().begin(), g.vertex_names().end());
  if (alpha != verts) return false;
  return same_labeled_graph(graph_of_word(w), g);
}

std::optional<int> uniform_k(const Word& w) {
  if (w.empty()) return 0;
  std::map<std::string, int> cnt;
  for (const auto& l : w.letters) ++cnt[l];
  int k = cnt.begin()->second;
  for (const auto& [l, c] : cnt)
    if (c != k) return std::nullopt;
  return k;
}

namespace {

bool is_complete_graph(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != g.n() - 1) return false;
  return true;
}

// Vertices that are the least member of their automorphism orbit. Any
// representing word can be relabeled by an automorphism, so the first
// letter may be restricted to orbit minima without losing completeness
// or changing the first word found by the vertex-ordered search.
std::vector<bool> orbit_minima(const Graph& g) {
  int n = g.n();
  std::vector<bool> minimal(n, true);
  if (n > 8) return minimal;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool automorphism = true;
    for (int u = 0; u < n && automorphism; ++u)
      for (int v = u + 1; v < n && automorphism; ++v)
        if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) automorphism = false;
    if (automorphism) {
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(perm[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int v = 0; v < n; ++v) minimal[v] = (find(v) == v);
  return minimal;
}

// Exhaustive search for a k-uniform representing word over vertex indices.
// Pair states track the last-seen letter of every pair and, for
// non-adjacent pairs, whether alternation is already broken.
class UniformWordSearch {
 public:
  UniformWordSearch(const Graph& g, int k) : g_(g), n_(g.n()), k_(k) {
    length_ = n_ * k_;
    cnt_.assign(n_, 0);
    seq_.assign(length_, -1);
    last_.assign(n_ * n_, -1);
    broken_.assign(n_ * n_, 0);
  }

  std::optional<std::vector<int>> run() {
    if (n_ == 0) return std::vector<int>{};
    first_allowed_ = orbit_minima(g_);
    if (fill(0)) return seq_;
    return std::nullopt;
  }

 private:
  bool fill(int pos) {
    if (pos == length_) return true;
    for (int x = 0; x < n_; ++x) {
      if (cnt_[x] == k_) continue;
      if (pos == 0 && !first_allowed_[x]) continue;
      if (place(x, pos)) {
        if (fill(pos + 1)) return true;
        unplace(x, pos);
      }
    }
    return false;
  }

  int pair_index(int a, int b) const { return a * n_ + b; }

  // Attempts to place x at pos; on failure restores nothing (no state was
  // committed). On success commits pair-state updates recorded for undo.
  bool place(int x, int pos) {
    int newcx = cnt_[x] + 1;
    // Feasibility screen against every other letter.
    for (int y = 0; y < n_; ++y) {
      if (y == x) continue;
      int p = pair_index(std::min(x, y), std::max(x, y));
      int last = last_[p];
      bool adj = g_.adjacent(x, y);
      int cy = cnt_[y];
      if (adj) {
        if (last == x) return false;
        // y exhausted: any further x would double up in the restriction.
        if (cy == k_ && newcx < k_) return false;
        // x exhausted now: at most one y may still follow.
        if (newcx == k_ && cy < k_ - 1) return false;
      } else {
        bool brk = broken_[p] || last == x;
        // x done with y done or owing a single forced append while the
        // restriction still alternates: the pair can no longer break.
        if (!brk && newcx == k_ && cy >= k_ - 1) return false;
      }
    }
    // Commit.
    trail_.push_back({});
    auto& changes = trail_.back();
    for (int y = 0; y < n_; ++y) {
      if (y == x) continue;
      int p = pair_index(std::min(x, y), std::max(x, y));
      changes.push_back({p, last_[p], broken_[p]});
      if (!g_.adjacent(x, y) && last_[p] == x) broken_[p] = 1;
      last_[p] = x;
    }
    ++cnt_[x];
    seq_[pos] = x;
    return true;
  }

  void unplace(int x, int pos) {
    seq_[pos] = -1;
    --cnt_[x];
    for (auto it = trail_.back().rbegin(); it != trail_.back().rend(); ++it) {
      last_[it->pair] = it->last;
      broken_[it->pair] = it->broken;
    }
    trail_.pop_back();
  }

  struct Change {
    int pair;
    int last;
    uint8_t broken;
  };

  const Graph& g_;
  int n_, k_, length_;
  std::vector<int> cnt_, seq_;
  std::vector<int> last_;
  std::vector<uint8_t> broken_;
  std::vector<bool> first_allowed_;
  std::vector<std::vector<Change>> trail_;
};

Word indices_to_word(const Graph& g, const std::vector<int>& seq) {
  Word w;
  w.letters.reserve(seq.size());
  for (int v : seq) w.letters.push_back(g.name_of(v));
  return w;
}

}  // namespace

std::optional<Word> find_k_uniform_word(const Graph& g, int k,
                                        const OracleLimits& limits) {
  if (k < 1 || k > 3) fail("invalid-argument", "uniformity must be 1, 2 or 3");
  if (k == 2 && g.n() > limits.k2_max_n)
    fail("oracle-bound", "2-uniform search capped at " + std::to_string(limits.k2_max_n) +
                             " vertices, got " + std::to_string(g.n()));
  if (k == 3 && g.n() > limits.k3_max_n)
    fail("oracle-bound", "3-uniform search capped at " + std::to_string(limits.k3_max_n) +
                             " vertices, got " + std::to_string(g.n()));
  if (k == 1) {
    // A permutation word alternates every pair, so 1-uniform words
    // represent exactly the complete graphs.
    if (!is_complete_graph(g)) return std::nullopt;
    Word w;
    w.letters = g.vertex_names();
    return w;
  }
  UniformWordSearch search(g, k);
  auto seq = search.run();
  if (!seq) return std::nullopt;
  Word w = indices_to_word(g, *seq);
  if (!represents(w, g)) fail("structure", "uniform word search produced an invalid word");
  return w;
}

const char* rep_number_name(RepNumber r) {
  switch (r) {
    case RepNumber::One: return "1";
    case RepNumber::Two: return "2";
    case RepNumber::Three: return "3";
    case RepNumber::MoreOrNone: return ">3-or-nonrepresentable";
  }
  return "?";
}

RepNumber representation_number_oracle(const Graph& g, const OracleLimits& limits) {
  if (is_complete_graph(g)) return RepNumber::One;
  if (find_k_uniform_word(g, 2, limits)) return RepNumber::Two;
  if (find_k_uniform_word(g, 3, limits)) return RepNumber::Three;
  return RepNumber::MoreOrNone;
}

namespace {

// ---- permutation representation search -----------------------------------
//
// A concatenation of permutations represents g exactly when every edge pair
// keeps one relative order across all permutations and every non-edge pair
// flips somewhere. The permutations are therefore linear extensions of a
// transitive orientation whose intersection realizes that orientation.

using OrderMatrix = std::vector<int8_t>;  // n*n, 1 = row before col required

class ExtensionCover {
 public:
  // order(u,v): 1 when u must precede v (the poset relation).
  ExtensionCover(int n, const OrderMatrix& before) : n_(n), before_(before) {}

  // Finds up to max_p linear extensions such that every incomparable pair
  // occurs in both orders across the chosen extensions. Returns the list
  // of extensions (vertex sequences), or none.
  std::optional<std::vector<std::vector<int>>> cover(int max_p) {
    // Ascending budgets so the first success uses the minimum number of
    // permutations. `need` holds the ordered pairs the remaining
    // extensions still owe (reversals of orders already realized).
    for (int j = 1; j <= max_p; ++j) {
      std::vector<std::pair<int, int>> need;
      std::vector<std::vector<int>> chosen;
      if (descend(j, chosen, need, true)) return chosen_;
    }
    return std::nullopt;
  }

 private:
  bool precedes(int u, int v) const { return before_[u * n_ + v] == 1; }

  bool descend(int budget, std::vector<std::vector<int>>& chosen,
               std::vector<std::pair<int, int>>& need, bool first) {
    if (!first && need.empty()) {
      chosen_ = chosen;
      return true;
    }
    if (budget == 0) return false;
    if (!first && budget == 1) {
      // The last extension must realize every remaining pair at once.
      OrderMatrix forced = before_;
      for (auto [a, b] : need) forced[a * n_ + b] = 1;
      auto topo = lex_topological(forced);
      if (!topo) return false;
      chosen.push_back(*topo);
      chosen_ = chosen;
      chosen.pop_back();
      return true;
    }
    // Enumerate linear extensions lexicographically.
    std::vector<int> prefix;
    std::vector<bool> used(n_, false);
    return enum_extensions(prefix, used, budget, chosen, need, first);
  }

  bool enum_extensions(std::vector<int>& prefix, std::vector<bool>& used, int budget,
                       std::vector<std::vector<int>>& chosen,
                       std::vector<std::pair<int, int>>& need, bool first) {
    if (static_cast<int>(prefix.size()) == n_) {
      std::vector<int> pos(n_);
      for (int i = 0; i < n_; ++i) pos[prefix[i]] = i;
      std::vector<std::pair<int, int>> next_need;
      if (first) {
        for (int u = 0; u < n_; ++u)
          for (int v = 0; v < n_; ++v)
            if (u != v && !precedes(u, v) && !precedes(v, u) && pos[u] < pos[v])
              next_need.emplace_back(v, u);
      } else {
        for (auto [a, b] : need)
          if (pos[a] > pos[b]) next_need.push_back({a, b});
      }
      chosen.push_back(prefix);
      bool ok = descend(budget - 1, chosen, next_need, false);
      if (!ok) chosen.pop_back();
      return ok;
    }
    for (int v = 0; v < n_; ++v) {
      if (used[v]) continue;
      bool minimal = true;
      for (int u = 0; u < n_ && minimal; ++u)
        if (!used[u] && u != v && precedes(u, v)) minimal = false;
      if (!minimal) continue;
      used[v] = true;
      prefix.push_back(v);
      if (enum_extensions(prefix, used, budget, chosen, need, first)) return true;
      prefix.pop_back();
      used[v] = false;
    }
    return false;
  }

  std::optional<std::vector<int>> lex_topological(const OrderMatrix& rel) const {
    std::vector<int> order;
    std::vector<bool> used(n_, false);
    for (int step = 0; step < n_; ++step) {
      int pick = -1;
      for (int v = 0; v < n_ && pick == -1; ++v) {
        if (used[v]) continue;
        bool minimal = true;
        for (int u = 0; u < n_ && minimal; ++u)
          if (!used[u] && u != v && rel[u * n_ + v] == 1) minimal = false;
        if (minimal) pick = v;
      }
      if (pick == -1) return std::nullopt;  // cycle
      used[pick] = true;
      order.push_back(pick);
    }
    return order;
  }

  int n_;
  OrderMatrix before_;
  std::vector<std::vector<int>> chosen_;
};

}  // namespace

std::optional<std::vector<Word>> find_permutation_representation(
    const Graph& g, int max_p, const OracleLimits& limits) {
  if (max_p < 1 || max_p > 4) fail("invalid-argument", "permutation count must be 1..4");
  if (g.n() > limits.perm_max_n)
    fail("oracle-bound", "permutation search capped at " +
                             std::to_string(limits.perm_max_n) + " vertices, got " +
                             std::to_string(g.n()));
  int n = g.n();
  if (n == 0) return std::vector<Word>{};

  std::optional<std::vector<std::vector<int>>> best;
  for_each_transitive_orientation(g, [&](const std::vector<std::pair<int, int>>& oriented) {
    OrderMatrix before(n * n, 0);
    for (auto [a, b] : oriented) before[a * n + b] = 1;
    int cap = best ? static_cast<int>(best->size()) - 1 : max_p;
    if (cap < 1) return false;  // already at one permutation, cannot improve
    ExtensionCover cover(n, before);
    auto found = cover.cover(cap);
    if (found && (!best || found->size() < best->size())) best = found;
    return !(best && best->size() == 1);
  });

  if (!best) return std::nullopt;
  std::vector<Word> perms;
  Word concatenated;
  for (const auto& ext : *best) {
    Word p = indices_to_word(g, ext);
    concatenated.letters.insert(concatenated.letters.end(), p.letters.begin(),
                                p.letters.end());
    perms.push_back(std::move(p));
  }
  if (!represents(concatenated, g))
    fail("structure", "permutation search produced an invalid word");
  return perms;
}

}  // namespace wordrep
