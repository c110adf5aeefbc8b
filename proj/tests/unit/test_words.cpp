#include <doctest.h>

#include "builders.hpp"
#include "wordrep/words.hpp"

using namespace wordrep;
using namespace testsupport;

namespace {

Word w(const char* text) { return parse_word(text); }

// Every connected graph on the given vertex count, by edge mask.
template <typename F>
void for_each_connected(int n, F fn) {
  int pairs = n * (n - 1) / 2;
  for (uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(std::string(1, static_cast<char>('a' + i)));
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (mask >> bit & 1) g.add_edge(i, j);
    if (g.connected()) fn(g);
  }
}

}  // namespace

TEST_CASE("restriction keeps exactly the chosen letters") {
  CHECK(word_to_string(restrict_to(w("a c a b b c c b"), {"a", "b"})) == "a a b b b");
  Word full = w("a c a b b c c b");
  CHECK(word_to_string(restrict_to(full, {"a", "b", "c"})) == word_to_string(full));
  CHECK(restrict_to(full, {}).empty());
  CHECK(restrict_to(restrict_to(full, {"a", "b"}), {"b", "c"}).letters ==
        restrict_to(full, {"b"}).letters);
}

TEST_CASE("subword is subsequence") {
  CHECK(is_subword(w("a a b c c b"), w("a c a b b c c b")));
  CHECK(is_subword(w("a b"), w("a b")));
  CHECK_FALSE(is_subword(w("a b"), w("b a")));
}

TEST_CASE("alternation") {
  CHECK_FALSE(alternates(w("a c a b b c c b"), "a", "b"));
  CHECK(alternates(w("b a c b c a"), "a", "b"));  // restriction baba
  CHECK(alternates(w("a c"), "a", "b"));          // at most one occurrence each
  CHECK(alternates(w(""), "a", "b"));
  CHECK_THROWS_AS(alternates(w("a"), "a", "a"), Error);
  // symmetry
  for (const char* text : {"a b a b", "a b b a", "b a b", "a"}) {
    CHECK(alternates(w(text), "a", "b") == alternates(w(text), "b", "a"));
  }
}

TEST_CASE("graph of a word") {
  Graph k3 = graph_of_word(w("a b c"));
  CHECK(k3.n() == 3);
  CHECK(k3.m() == 3);
  Graph edgeless = graph_of_word(w("a c a b b c c b"));
  CHECK(edgeless.n() == 3);
  CHECK(edgeless.m() == 0);
  Graph p3 = graph_of_word(w("b a c b c a"));
  CHECK(p3.m() == 2);
  CHECK(p3.adjacent(p3.index_of("a"), p3.index_of("b")));
  CHECK(p3.adjacent(p3.index_of("b"), p3.index_of("c")));
  CHECK_FALSE(p3.adjacent(p3.index_of("a"), p3.index_of("c")));
}

TEST_CASE("permutation words induce complete graphs") {
  for (const char* text : {"a", "b a", "c a b", "d c b a", "e b d a c"}) {
    Graph g = graph_of_word(w(text));
    CHECK(g.m() == g.n() * (g.n() - 1) / 2);
  }
}

TEST_CASE("represents") {
  Graph p3 = path_graph(3);
  CHECK(represents(w("b a c b c a"), p3));
  CHECK_FALSE(represents(w("a b c"), p3));
  Graph k2 = clique_graph(2);
  CHECK(represents(w("a b a b"), k2));
  CHECK(represents(w("a b a"), k2));
  CHECK_FALSE(represents(w("a b"), p3));  // alphabet mismatch
}

TEST_CASE("uniformity") {
  CHECK(uniform_k(w("a b c a b c")) == 2);
  CHECK_FALSE(uniform_k(w("a c a b b c c b")).has_value());
  CHECK(uniform_k(w("a b c")) == 1);
}

TEST_CASE("uniform word search on named graphs") {
  auto one = find_k_uniform_word(clique_graph(3), 1);
  REQUIRE(one.has_value());
  CHECK(uniform_k(*one) == 1);
  CHECK(represents(*one, clique_graph(3)));

  CHECK_FALSE(find_k_uniform_word(cycle_graph(5), 1).has_value());
  CHECK_FALSE(find_k_uniform_word(path_graph(4), 1).has_value());

  auto two = find_k_uniform_word(path_graph(4), 2);
  REQUIRE(two.has_value());
  CHECK(uniform_k(*two) == 2);
  CHECK(represents(*two, path_graph(4)));
}

TEST_CASE("oracle bound errors are explicit") {
  Graph big = random_connected(9, 40, 3);
  CHECK_THROWS_AS(find_k_uniform_word(big, 2), Error);
  CHECK_THROWS_AS(find_k_uniform_word(path_graph(7), 3), Error);
  CHECK_THROWS_AS(find_k_uniform_word(path_graph(4), 4), Error);
}

TEST_CASE("uniform search self-verification on every small connected graph") {
  // Any word returned represents its graph; exhaustive over n <= 4 plus
  // sampled n = 5.
  for (int n = 1; n <= 4; ++n) {
    for_each_connected(n, [&](const Graph& g) {
      for (int k = 1; k <= 3; ++k) {
        auto found = find_k_uniform_word(g, k);
        if (found) {
          CHECK(uniform_k(*found) == k);
          CHECK(represents(*found, g));
        }
      }
    });
  }
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_connected(5, 50, seed);
    for (int k = 2; k <= 3; ++k) {
      auto found = find_k_uniform_word(g, k);
      if (found) CHECK(represents(*found, g));
    }
  }
}

TEST_CASE("representation number oracle") {
  CHECK(representation_number_oracle(clique_graph(4)) == RepNumber::One);
  CHECK(representation_number_oracle(path_graph(4)) == RepNumber::Two);
  CHECK(representation_number_oracle(wheel5()) == RepNumber::MoreOrNone);
}

TEST_CASE("representation number oracle accepts the even-4-sun at a raised bound") {
  OracleLimits lim;
  lim.k3_max_n = 8;
  Graph sun;  // built by hand to avoid depending on the family module here
  for (int i = 1; i <= 4; ++i) sun.add_vertex("u" + std::to_string(i));
  for (int i = 1; i <= 4; ++i) sun.add_vertex("w" + std::to_string(i));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) sun.add_edge(i, j);
  for (int i = 0; i < 4; ++i) {
    sun.add_edge(4 + i, i);
    sun.add_edge(4 + i, (i + 1) % 4);
  }
  CHECK(representation_number_oracle(sun, lim) == RepNumber::Three);
}

TEST_CASE("permutation representations") {
  auto k3 = find_permutation_representation(clique_graph(3), 4);
  REQUIRE(k3.has_value());
  CHECK(k3->size() == 1);

  auto p3 = find_permutation_representation(path_graph(3), 4);
  REQUIRE(p3.has_value());
  CHECK(p3->size() == 2);
  Word joined;
  for (const auto& p : *p3)
    joined.letters.insert(joined.letters.end(), p.letters.begin(), p.letters.end());
  CHECK(represents(joined, path_graph(3)));

  CHECK_FALSE(find_permutation_representation(cycle_graph(5), 4).has_value());
  CHECK_THROWS_AS(find_permutation_representation(random_connected(8, 40, 1), 4), Error);
}

TEST_CASE("word serialization round-trip") {
  Word multi;
  multi.letters = {"alpha", "beta", "alpha"};
  CHECK(parse_word(word_to_string(multi)).letters == multi.letters);
}
