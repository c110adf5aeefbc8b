#include "wordrep/pipeline.hpp"

#include <algorithm>
#include <sstream>

namespace wordrep {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::UserCertified: return "user-certified";
    case Provenance::GeneratorCertified: return "generator-certified";
    case Provenance::Uncertified: return "uncertified";
  }
  return "?";
}

const char* rep_class_name(RepClass c) {
  switch (c) {
    case RepClass::One: return "1";
    case RepClass::Two: return "2";
    case RepClass::Three: return "3";
    case RepClass::TwoOrThree: return "2-or-3";
    case RepClass::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

bool is_complete_graph(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != g.n() - 1) return false;
  return true;
}

// Candidate split sides from a certified tree: for every tree edge, the
// union of the bags on one side. Larger balanced cuts first so the
// decomposition recursion divides instead of peeling.
std::vector<Bitset> hints_from_tree(const Graph& g, const PartitionTree& t) {
  int b = static_cast<int>(t.bags.size());
  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : t.tree_edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<Bitset> bag_bits(b, Bitset(g.n()));
  for (int i = 0; i < b; ++i)
    for (const auto& name : t.bags[i]) bag_bits[i].set(g.index_of(name));
  std::vector<std::pair<int, Bitset>> sided;
  for (size_t e = 0; e < t.tree_edges.size(); ++e) {
    auto [from, to] = t.tree_edges[e];
    // Bags reachable from `from` without crossing this edge.
    std::vector<bool> seen(b, false);
    std::vector<int> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int nxt : adj[cur]) {
        if (seen[nxt]) continue;
        if (cur == from && nxt == to) continue;
        if (cur == to && nxt == from) continue;
        seen[nxt] = true;
        stack.push_back(nxt);
      }
    }
    Bitset side(g.n());
    for (int i = 0; i < b; ++i)
      if (seen[i]) side |= bag_bits[i];
    int sz = side.count();
    sided.emplace_back(std::min(sz, g.n() - sz), std::move(side));
  }
  std::stable_sort(sided.begin(), sided.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Bitset> hints;
  hints.reserve(sided.size());
  for (auto& [sz, side] : sided) hints.push_back(std::move(side));
  return hints;
}

std::optional<Word> whole_graph_word(const Graph& g, const PipelineOptions& opts,
                                     bool must_exist) {
  if (auto w = find_k_uniform_word(g, 1, opts.oracle)) return w;
  bool exhaustive = true;
  if (g.n() <= opts.oracle.k2_max_n) {
    if (auto w = find_k_uniform_word(g, 2, opts.oracle)) return w;
  } else {
    exhaustive = false;
  }
  if (g.n() <= opts.oracle.k3_max_n) {
    if (auto w = find_k_uniform_word(g, 3, opts.oracle)) return w;
  } else {
    exhaustive = false;
  }
  if (exhaustive && must_exist)
    fail("structure",
         "no uniform word of multiplicity at most three despite a positive verdict");
  return std::nullopt;
}

}  // namespace

Verdict recognize(const WpcInput& input, const PipelineOptions& opts) {
  const Graph& g = input.graph;
  if (!g.connected()) fail("disconnected", "recognition requires a connected graph");

  bool certified = input.tree.has_value();
  if (certified) {
    TreeReport tr = verify_partition_tree(g, *input.tree);
    if (!tr.ok)
      throw NotWpcError("partition tree rejected (" + tr.condition + "): " + tr.detail);
  } else {
    if (auto w = chordality_witness(g))
      throw NotWpcError("not chordal: '" + w->u + "' and '" + w->w +
                        "' are nonadjacent higher neighbors of '" + w->pivot + "'");
  }

  std::vector<Bitset> hints;
  if (certified) hints = hints_from_tree(g, *input.tree);
  Verdict v;
  v.decomposition = minimalize(decompose_with_hints(g, hints));

  for (size_t i = 0; i < v.decomposition.components.size(); ++i) {
    const Graph& comp = v.decomposition.components[i];
    ComponentReport report;
    report.index = static_cast<int>(i);
    report.kind = v.decomposition.kinds[i];
    auto partition = split_partition(comp);
    if (!partition) {
      if (certified)
        fail("structure",
             "certified input produced a non-split component; certificate inconsistent");
      throw NotWpcError("decomposition component " + std::to_string(i) +
                        " is prime but not a split graph");
    }
    if (report.kind == ComponentKind::Prime) {
      auto labeling = find_labeling(comp, *partition);
      if (labeling) {
        report.labeling = labeling;
        report.note = "prime split component admits a valid labeling";
      } else {
        report.word_representable = false;
        report.note = "prime split component admits no valid labeling";
      }
    } else {
      report.note = "cliques and stars are word-representable";
      report.labeling = find_labeling(comp, *partition);
    }
    if (report.word_representable && report.labeling &&
        comp.n() <= opts.word_bound) {
      report.word = construct_word_for_split(comp, *report.labeling, opts.oracle);
    }
    v.components.push_back(std::move(report));
  }

  v.word_representable =
      std::all_of(v.components.begin(), v.components.end(),
                  [](const ComponentReport& c) { return c.word_representable; });
  if (v.word_representable && g.n() <= opts.word_bound)
    v.word = whole_graph_word(g, opts, /*must_exist=*/true);
  return v;
}

RepVerdict representation_number(const WpcInput& input, const FamilySpec& families,
                                 const PipelineOptions& opts) {
  Verdict rec = recognize(input, opts);
  if (!rec.word_representable)
    fail("invalid-argument",
         "representation number classification needs a word-representable input");
  RepVerdict v;
  if (is_complete_graph(input.graph)) {
    v.value = RepClass::One;
    v.reason = "complete graph";
    return v;
  }
  v.hits = scan_c_family(input.graph, families, opts.k_max, opts.induced);
  if (!v.hits.empty()) {
    v.value = RepClass::Three;
    v.reason = "forbidden family member present: " + v.hits.front().member;
    return v;
  }
  if (families.external_loaded) {
    v.value = RepClass::Two;
    v.reason = "no forbidden family member found (family data complete)";
    return v;
  }
  if (input.graph.n() <= opts.oracle.k2_max_n) {
    if (auto w = find_k_uniform_word(input.graph, 2, opts.oracle)) {
      v.value = RepClass::Two;
      v.reason = "two-uniform representing word found";
      v.two_uniform_word = w;
    } else {
      v.value = RepClass::Three;
      v.reason = "exhaustive two-uniform search failed";
    }
    return v;
  }
  v.value = RepClass::TwoOrThree;
  v.reason =
      "no built-in family member found, external family files absent, and the "
      "graph exceeds the two-uniform search bound";
  return v;
}

CompositionRecord component_rep_composition(const Graph& g, const PipelineOptions& opts) {
  CompositionRecord record;
  record.whole = representation_number_oracle(g, opts.oracle);
  DecompositionTree t = minimalize(decompose(g));
  auto as_int = [](RepNumber r) {
    switch (r) {
      case RepNumber::One: return 1;
      case RepNumber::Two: return 2;
      case RepNumber::Three: return 3;
      case RepNumber::MoreOrNone: return 4;
    }
    return 4;
  };
  int max_comp = 0;
  for (const Graph& comp : t.components) {
    RepNumber r = representation_number_oracle(comp, opts.oracle);
    record.component_numbers.push_back(r);
    max_comp = std::max(max_comp, as_int(r));
  }
  record.holds = as_int(record.whole) == max_comp;
  return record;
}

ComparabilityVerdict comparability(const WpcInput& input, const FamilySpec& families,
                                   const PipelineOptions& opts) {
  (void)families;  // the W obstructions are built in
  if (!input.tree.has_value())
    fail("invalid-argument",
         "comparability classification requires a certified input (partition tree)");
  TreeReport tr = verify_partition_tree(input.graph, *input.tree);
  if (!tr.ok)
    throw NotWpcError("partition tree rejected (" + tr.condition + "): " + tr.detail);

  ComparabilityVerdict v;
  v.w_hits = scan_w_family(input.graph, opts.induced);
  bool small = input.graph.n() <= opts.orientation_bound;
  if (v.w_hits.empty()) {
    v.value = ComparabilityAnswer::Yes;
    v.prn_bound = 4;
    if (small) {
      auto orientation = find_transitive_orientation(input.graph);
      if (!orientation)
        fail("structure",
             "W-free certified input admits no transitive orientation; "
             "property violation");
      std::vector<std::pair<std::string, std::string>> named;
      for (auto [a, b] : *orientation)
        named.emplace_back(input.graph.name_of(a), input.graph.name_of(b));
      v.orientation = std::move(named);
    }
    if (input.graph.n() <= opts.oracle.perm_max_n) {
      auto perms = find_permutation_representation(input.graph, 4, opts.oracle);
      if (!perms)
        fail("structure",
             "comparability input has no permutation representation within four "
             "permutations; property violation");
      v.prn_exact = static_cast<int>(perms->size());
    }
  } else {
    v.value = ComparabilityAnswer::No;
    if (small && find_transitive_orientation(input.graph))
      fail("structure",
           "obstruction present yet a transitive orientation exists; property "
           "violation");
  }
  return v;
}

PrnReport prn_report(const Graph& g, const PipelineOptions& opts) {
  PrnReport report;
  if (g.n() <= opts.oracle.perm_max_n) {
    auto perms = find_permutation_representation(g, 4, opts.oracle);
    if (perms) report.exact = static_cast<int>(perms->size());
  }
  return report;
}

std::string verdict_to_text(const Verdict& v) {
  std::ostringstream out;
  out << "word-representable: " << (v.word_representable ? "yes" : "no") << "\n";
  out << "components: " << v.components.size() << "\n";
  for (const auto& c : v.components) {
    out << "component " << c.index << " kind " << component_kind_name(c.kind)
        << " word-representable " << (c.word_representable ? "yes" : "no") << "\n";
    if (!c.note.empty()) out << "component " << c.index << " note " << c.note << "\n";
    if (c.labeling) {
      std::istringstream lab(labeling_to_text(*c.labeling));
      std::string line;
      while (std::getline(lab, line))
        out << "component " << c.index << " " << line << "\n";
    }
    if (c.word)
      out << "component " << c.index << " word " << word_to_string(*c.word) << "\n";
  }
  if (v.word) out << "word: " << word_to_string(*v.word) << "\n";
  return out.str();
}

std::string rep_verdict_to_text(const RepVerdict& v) {
  std::ostringstream out;
  out << "representation-number: " << rep_class_name(v.value) << "\n";
  out << "reason: " << v.reason << "\n";
  for (const auto& hit : v.hits) {
    out << "hit " << hit.member << ":";
    for (const auto& [from, to] : hit.embedding) out << " " << from << "->" << to;
    out << "\n";
  }
  if (v.two_uniform_word)
    out << "two-uniform-word: " << word_to_string(*v.two_uniform_word) << "\n";
  return out.str();
}

std::string comparability_to_text(const ComparabilityVerdict& v) {
  std::ostringstream out;
  out << "comparability: " << (v.value == ComparabilityAnswer::Yes ? "yes" : "no")
      << "\n";
  for (const auto& hit : v.w_hits) {
    out << "hit " << hit.member << ":";
    for (const auto& [from, to] : hit.embedding) out << " " << from << "->" << to;
    out << "\n";
  }
  if (v.orientation) {
    out << "orientation:";
    for (const auto& [a, b] : *v.orientation) out << " " << a << "->" << b;
    out << "\n";
  }
  if (v.prn_bound) out << "prn-bound: " << *v.prn_bound << "\n";
  if (v.prn_exact) out << "prn-exact: " << *v.prn_exact << "\n";
  return out.str();
}

}  // namespace wordrep
