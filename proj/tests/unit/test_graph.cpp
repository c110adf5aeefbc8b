#include <doctest.h>

#include <set>

#include "builders.hpp"
#include "oracles.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/split_decomposition.hpp"

using namespace wordrep;
using namespace testsupport;

namespace {

std::set<std::string> names(const Graph& g, const Bitset& s) {
  auto v = set_names(g, s);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("neighborhood basics") {
  Graph p4 = path_graph(4);
  CHECK(names(p4, neighborhood(p4, "b")) == std::set<std::string>{"a", "c"});
  Graph k3 = clique_graph(3);
  CHECK(names(k3, neighborhood(k3, "a")) == std::set<std::string>{"b", "c"});
  Graph lone;
  lone.add_vertex("v");
  CHECK(neighborhood(lone, "v").none());
  CHECK_THROWS_WITH_AS(neighborhood(p4, "zz"), "unknown-vertex: 'zz'", Error);
}

TEST_CASE("set neighborhood") {
  Graph c4 = cycle_graph(4);
  CHECK(names(c4, set_neighborhood(c4, vertex_set(c4, {"a", "c"}))) ==
        std::set<std::string>{"b", "d"});
  Graph p4 = path_graph(4);
  CHECK(names(p4, set_neighborhood(p4, vertex_set(p4, {"a", "b"}))) ==
        std::set<std::string>{"c"});
  CHECK(set_neighborhood(p4, Bitset::full(4)).none());
  CHECK_THROWS_AS(set_neighborhood(p4, Bitset(7)), Error);
}

TEST_CASE("induced subgraphs") {
  Graph k4 = clique_graph(4);
  Graph k3 = induced_subgraph(k4, vertex_set(k4, {"a", "b", "c"}));
  CHECK(same_labeled_graph(k3, clique_graph(3)));
  Graph c4 = cycle_graph(4);
  Graph p3 = induced_subgraph(c4, vertex_set(c4, {"a", "b", "c"}));
  CHECK(p3.n() == 3);
  CHECK(p3.m() == 2);
  Graph single = induced_subgraph(c4, vertex_set(c4, {"a"}));
  CHECK(single.n() == 1);
  CHECK(single.m() == 0);
  CHECK(same_labeled_graph(induced_subgraph(c4, Bitset::full(4)), c4));
}

TEST_CASE("bipartite edges") {
  Graph c4 = cycle_graph(4);
  auto cross = bipartite_edges(c4, vertex_set(c4, {"a", "c"}), vertex_set(c4, {"b", "d"}));
  CHECK(cross.size() == 4);
  Graph p4 = path_graph(4);
  auto bc = bipartite_edges(p4, vertex_set(p4, {"a", "b"}), vertex_set(p4, {"c", "d"}));
  REQUIRE(bc.size() == 1);
  CHECK(p4.name_of(bc[0].first) == "b");
  CHECK(p4.name_of(bc[0].second) == "c");
  Graph two;
  two.add_vertex("x");
  two.add_vertex("y");
  CHECK(bipartite_edges(two, vertex_set(two, {"x"}), vertex_set(two, {"y"})).empty());
  CHECK_THROWS_AS(bipartite_edges(c4, vertex_set(c4, {"a"}), vertex_set(c4, {"a", "b"})),
                  Error);
}

TEST_CASE("complete-to") {
  Graph c4 = cycle_graph(4);
  CHECK(is_complete_to(c4, vertex_set(c4, {"a", "c"}), vertex_set(c4, {"b", "d"})));
  Graph p4 = path_graph(4);
  CHECK_FALSE(is_complete_to(p4, vertex_set(p4, {"a", "b"}), vertex_set(p4, {"c", "d"})));
  CHECK(is_complete_to(p4, Bitset(4), vertex_set(p4, {"a"})));
  CHECK_FALSE(is_complete_to(p4, vertex_set(p4, {"a"}), vertex_set(p4, {"a"})));
}

TEST_CASE("complete-to agrees with the edge count product") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_connected(6, 45, seed);
    for (uint32_t am = 1; am < 64; ++am) {
      for (uint32_t bm = 1; bm < 64; ++bm) {
        if (am & bm) continue;
        Bitset a(6), b(6);
        for (int v = 0; v < 6; ++v) {
          if (am >> v & 1) a.set(v);
          if (bm >> v & 1) b.set(v);
        }
        bool complete = is_complete_to(g, a, b);
        bool product = bipartite_edges(g, a, b).size() ==
                       static_cast<size_t>(a.count()) * b.count();
        CHECK(complete == product);
      }
    }
  }
}

TEST_CASE("shape classification") {
  CHECK(classify_shape(clique_graph(4)) == Shape::Clique);
  CHECK(classify_shape(star_graph(3)) == Shape::Star);
  CHECK(classify_shape(clique_graph(1)) == Shape::Clique);
  CHECK(classify_shape(clique_graph(2)) == Shape::Clique);
  CHECK(classify_shape(path_graph(3)) == Shape::Star);
  CHECK(classify_shape(path_graph(4)) == Shape::Other);
  Graph c5 = cycle_graph(5);
  CHECK_FALSE(brute_has_split(c5));  // prime by bipartition enumeration
  CHECK(classify_shape(c5) == Shape::Prime);
  Graph split;
  split.add_vertex("x");
  split.add_vertex("y");
  CHECK_THROWS_AS(classify_shape(split), Error);
}

TEST_CASE("shape classification is relabeling-invariant") {
  std::vector<Graph> zoo = {clique_graph(4), star_graph(4), cycle_graph(5),
                            cycle_graph(6), path_graph(5)};
  std::vector<int> perm{3, 1, 4, 0, 2};
  for (const Graph& g : zoo) {
    std::vector<int> p(perm.begin(), perm.begin() + g.n());
    if (g.n() == 6) p = {5, 3, 1, 0, 4, 2};
    CHECK(classify_shape(g) == classify_shape(relabeled(g, p)));
  }
}

TEST_CASE("graph construction rules") {
  Graph g;
  g.add_vertex("a");
  CHECK_THROWS_AS(g.add_vertex("a"), Error);
  g.add_vertex("b");
  CHECK_THROWS_AS(g.add_edge("a", "a"), Error);
  g.add_edge("a", "b");
  g.add_edge("a", "b");  // duplicate ignored
  CHECK(g.m() == 1);
  CHECK(g.connected());
  g.add_vertex("c");
  CHECK_FALSE(g.connected());
}

TEST_CASE("disjoint union relabels collisions") {
  Graph a = path_graph(2);
  Graph b = path_graph(2);
  Graph u = disjoint_union(a, b);
  CHECK(u.n() == 4);
  CHECK(u.m() == 2);
  CHECK(u.has_vertex("a'"));
  CHECK_FALSE(u.connected());
}

TEST_CASE("canonical copy sorts vertices") {
  Graph g;
  g.add_vertex("z");
  g.add_vertex("a");
  g.add_edge("z", "a");
  Graph c = canonical_copy(g);
  CHECK(c.name_of(0) == "a");
  CHECK(same_labeled_graph(g, c));
}
