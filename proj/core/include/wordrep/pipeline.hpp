#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordrep/families.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/split_decomposition.hpp"
#include "wordrep/split_wordrep.hpp"
#include "wordrep/words.hpp"
#include "wordrep/wpc.hpp"

namespace wordrep {

enum class Provenance { UserCertified, GeneratorCertified, Uncertified };
const char* provenance_name(Provenance p);

// Input contract: a certified input carries a partition tree (verified on
// entry); an uncertified input passes necessary screens (chordality and
// split-shaped decomposition components) or is refused as not
// well-partitioned chordal.
struct WpcInput {
  Graph graph;
  std::optional<PartitionTree> tree;
  Provenance provenance = Provenance::Uncertified;
};

struct PipelineOptions {
  OracleLimits oracle;
  InducedLimits induced;
  int word_bound = 6;          // whole-graph verified-word evidence cap
  int k_max = 12;              // sun scan cap
  int orientation_bound = 10;  // double-certification cap
};

struct ComponentReport {
  int index = 0;
  ComponentKind kind = ComponentKind::Clique;
  bool word_representable = true;
  std::optional<SplitLabeling> labeling;
  std::optional<Word> word;
  std::string note;
};

struct Verdict {
  bool word_representable = false;
  DecompositionTree decomposition;
  std::vector<ComponentReport> components;
  std::optional<Word> word;  // verified whole-graph word within word_bound
};

class NotWpcError : public Error {
 public:
  explicit NotWpcError(const std::string& detail) : Error("not-wpc", detail) {}
};

// The recognition procedure: minimal split decomposition, then a
// word-representability test per component (cliques and stars pass
// unconditionally, prime components via the split-graph labeling).
Verdict recognize(const WpcInput& input, const PipelineOptions& opts = {});

enum class RepClass { One, Two, Three, TwoOrThree, NotApplicable };
const char* rep_class_name(RepClass c);

struct RepVerdict {
  RepClass value = RepClass::NotApplicable;
  std::string reason;
  std::vector<FamilyHit> hits;
  std::optional<Word> two_uniform_word;
};

// Representation-number classification of a word-representable input:
// 1 for complete graphs; 3 on a forbidden-family hit; otherwise 2 when
// the family data is complete or the two-uniform oracle resolves it;
// TwoOrThree when neither can decide.
RepVerdict representation_number(const WpcInput& input, const FamilySpec& families,
                                 const PipelineOptions& opts = {});

struct CompositionRecord {
  RepNumber whole = RepNumber::MoreOrNone;
  std::vector<RepNumber> component_numbers;
  bool holds = false;  // whole equals the max over components
};

// Oracle check of the composition rule: the representation number of g
// equals the maximum over its minimal-decomposition components.
CompositionRecord component_rep_composition(const Graph& g,
                                            const PipelineOptions& opts = {});

enum class ComparabilityAnswer { Yes, No };

struct ComparabilityVerdict {
  ComparabilityAnswer value = ComparabilityAnswer::No;
  std::vector<FamilyHit> w_hits;
  std::optional<std::vector<std::pair<std::string, std::string>>> orientation;
  std::optional<int> prn_bound;  // 4 whenever comparability holds
  std::optional<int> prn_exact;  // within the factorial bound
};

// Comparability of a certified input via the W-family scan, double
// certified by the exhaustive orientation search on small graphs.
ComparabilityVerdict comparability(const WpcInput& input, const FamilySpec& families,
                                   const PipelineOptions& opts = {});

struct PrnReport {
  int bound = 4;
  std::optional<int> exact;
};

// Permutation-representation report for comparability inputs.
PrnReport prn_report(const Graph& g, const PipelineOptions& opts = {});

// Stable-order text reports.
std::string verdict_to_text(const Verdict& v);
std::string rep_verdict_to_text(const RepVerdict& v);
std::string comparability_to_text(const ComparabilityVerdict& v);

}  // namespace wordrep
