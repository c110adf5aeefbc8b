#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// A word is a finite sequence of letters; letters are vertex names, so
// multi-character letters are supported. Serialized space-separated.
struct Word {
  std::vector<std::string> letters;

  bool empty() const { return letters.empty(); }
  size_t length() const { return letters.size(); }
  std::set<std::string> alphabet() const {
    return {letters.begin(), letters.end()};
  }
};

Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);

// Subsequence of w keeping exactly the occurrences of letters in y.
Word restrict_to(const Word& w, const std::set<std::string>& y);

// True iff u is a subsequence of w.
bool is_subword(const Word& u, const Word& w);

// True iff the {a,b}-restriction strictly alternates. Restrictions of
// length 0 or 1 alternate vacuously. a == b is an error.
bool alternates(const Word& w, const std::string& a, const std::string& b);

// Vertices are the alphabet in first-occurrence order; ab is an edge iff
// a and b alternate in w.
Graph graph_of_word(const Word& w);

// True iff alphabet(w) equals g's vertex set and graph_of_word(w) equals g.
bool represents(const Word& w, const Graph& g);

// k when every letter occurs exactly k times, none otherwise.
std::optional<int> uniform_k(const Word& w);

// Size caps for the exhaustive searches. Exceeding a cap raises an
// oracle-bound error rather than returning a silent approximation.
struct OracleLimits {
  int k2_max_n = 8;
  int k3_max_n = 6;
  int perm_max_n = 7;
};

// Exhaustive backtracking search for a k-uniform word representing g,
// k in {1,2,3}. Positions are filled left to right and candidate letters
// tried in vertex order, so the first word found is deterministic.
// A none result is a proof that no k-uniform representant exists.
std::optional<Word> find_k_uniform_word(const Graph& g, int k,
                                        const OracleLimits& limits = {});

enum class RepNumber { One, Two, Three, MoreOrNone };

const char* rep_number_name(RepNumber r);

// Smallest k <= 3 admitting a k-uniform representing word, else MoreOrNone.
RepNumber representation_number_oracle(const Graph& g, const OracleLimits& limits = {});

// Permutations p_1..p_j (j <= max_p) whose concatenation represents g, or
// none; exhaustive for graphs within the factorial bound (n <= perm_max_n).
std::optional<std::vector<Word>> find_permutation_representation(
    const Graph& g, int max_p, const OracleLimits& limits = {});

}  // namespace wordrep
