#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/words.hpp"

namespace wordrep {

// Partition of a split graph into a clique side and an independent side.
struct SplitPartition {
  Bitset clique;
  Bitset independent;
};

// A valid partition when g is a split graph (clique side of maximum size,
// ties broken by vertex order via a stable degree sort), none otherwise.
std::optional<SplitPartition> split_partition(const Graph& g);

// Classification of an independent vertex's neighborhood under a labeling
// of the clique side by 1..k:
//   Interval: labels form [lo, hi];
//   Wrap:     labels form [1, lo] plus [hi, k] with a gap between them;
//   Empty:    no neighbors;
//   Invalid:  anything else.
// The full set [1, k] is reported as Interval(1, k).
struct Descriptor {
  enum class Kind { Empty, Interval, Wrap, Invalid };
  Kind kind = Kind::Empty;
  int lo = 0;
  int hi = 0;

  static Descriptor empty() { return {}; }
  static Descriptor interval(int lo, int hi) { return {Kind::Interval, lo, hi}; }
  static Descriptor wrap(int m, int n) { return {Kind::Wrap, m, n}; }
  static Descriptor invalid() { return {Kind::Invalid, 0, 0}; }
  bool operator==(const Descriptor&) const = default;
};

std::string descriptor_to_string(const Descriptor& d);

// A labeling of the clique side by 1..k together with the induced
// descriptor of every independent vertex.
struct SplitLabeling {
  std::map<std::string, int> label_of;            // clique vertex -> 1..k
  std::map<std::string, Descriptor> descriptors;  // independent vertex -> shape
};

// Descriptor of independent vertex a's neighborhood under the labeling.
// a must belong to the independent side.
Descriptor descriptor_of(const Graph& g, const SplitPartition& p,
                         const std::map<std::string, int>& label_of,
                         const std::string& a);

// Pairwise compatibility conditions between descriptors:
// a wrap [1,m]+[n,k] and an interval [l,r] conflict unless l > m or r < n;
// two wraps [1,m]+[n,k] and [1,m']+[n',k] conflict unless m' < n and m < n'.
bool violates_wrap_interval(const Descriptor& wrap, const Descriptor& interval);
bool violates_wrap_wrap(const Descriptor& w1, const Descriptor& w2);

struct LabelingReport {
  bool ok = false;
  std::string condition;  // "bijection", "shape", "wrap-vs-interval", "wrap-vs-wrap"
  std::string witness1, witness2;
  std::string detail;
};

// Checks that label_of is a bijection onto 1..k, that every independent
// vertex has a non-Invalid descriptor, and that all descriptor pairs are
// compatible. The report cites the first violated condition.
LabelingReport validate_labeling(const Graph& g, const SplitPartition& p,
                                 const std::map<std::string, int>& label_of);

// Searches for a labeling passing validate_labeling, or none. The search
// assigns labels 1..k in order, pruning prefixes whose partial
// neighborhood traces can no longer become intervals or wraps and
// checking pair conditions as soon as descriptors are determined; a
// none result is exhaustive.
std::optional<SplitLabeling> find_labeling(const Graph& g, const SplitPartition& p);

// True iff find_labeling succeeds; non-split input is an error.
bool is_word_representable_split(const Graph& g);

// A verified representing word of uniformity 1..3: guided candidates
// first (single permutation for cliques, a labeling-driven two-block
// insertion word), then the exhaustive bounded search; beyond the bound
// a construction-gap error is raised rather than an unverified word.
Word construct_word_for_split(const Graph& g, const SplitLabeling& labeling,
                              const OracleLimits& limits = {});

std::string labeling_to_text(const SplitLabeling& labeling);

}  // namespace wordrep
