#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// The four comparability obstructions W1..W4 on numeric vertex names.
// W1 is the net: a triangle with a pendant on each corner.
Graph generate_w(int i);

// Complete k-sun: clique u1..uk plus independent w1..wk with w_i adjacent
// to u_i and u_{i+1 mod k}. Any k >= 3.
Graph generate_sun(int k);

// Even k only, k >= 4; odd or small k is an error.
Graph generate_even_sun(int k);

struct FamilyMember {
  std::string id;
  Graph graph;
};

// Non-circle obstruction family: built-in complete suns plus externally
// supplied members (the F-graphs live in user family files; verdicts that
// depend on them are conditional when the files are absent).
struct FamilySpec {
  bool include_odd_suns = false;  // parity flag; default scans even suns only
  bool external_loaded = false;
  std::vector<FamilyMember> external;
};

// Loads '<dir>/manifest.txt' ("<id> <filename>" lines) and the named
// edge-list files. Members must be connected and simple.
FamilySpec load_family_dir(const std::string& dir);

struct InducedLimits {
  int max_pattern = 12;
  int max_host = 60;
};

using Embedding = std::vector<std::pair<std::string, std::string>>;

// Injective map (pattern vertex -> host vertex) under which h is an
// induced subgraph of g, or none. Exhaustive backtracking with degree and
// adjacency pruning; candidate images are tried in vertex order and the
// first witness is returned.
std::optional<Embedding> contains_induced(const Graph& g, const Graph& h,
                                          const InducedLimits& limits = {});

struct FamilyHit {
  std::string member;
  Embedding embedding;
};

// Scans g for every family member with at most |g| vertices: built-in
// suns up to k_max plus the external members of spec.
std::vector<FamilyHit> scan_c_family(const Graph& g, const FamilySpec& spec, int k_max,
                                     const InducedLimits& limits = {});

// Scans g for W1..W4.
std::vector<FamilyHit> scan_w_family(const Graph& g, const InducedLimits& limits = {});

}  // namespace wordrep
