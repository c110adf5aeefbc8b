// Command-line front end: decomposition, recognition, representation
// numbers, word checks, generators and serializers over the text formats
// documented in the README.
//
// Exit codes: 0 yes/success, 1 no/false, 2 not-WPC, 3 bound or
// insufficient data, 4 usage/input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordrep/families.hpp"
#include "wordrep/io.hpp"
#include "wordrep/pipeline.hpp"

using json = nlohmann::ordered_json;
using namespace wordrep;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitNotWpc = 2;
constexpr int kExitBound = 3;
constexpr int kExitUsage = 4;

struct CommonFlags {
  std::string families_dir;
  int oracle_bound = 0;  // 0: keep defaults
  int k_max = 12;
  uint64_t seed = 0;
  std::string format = "text";
  bool include_odd_suns = false;
};

PipelineOptions make_options(const CommonFlags& flags) {
  PipelineOptions opts;
  if (flags.oracle_bound > 0) {
    opts.oracle.k2_max_n = flags.oracle_bound;
    opts.oracle.k3_max_n = flags.oracle_bound;
    opts.word_bound = flags.oracle_bound;
  }
  opts.k_max = flags.k_max;
  return opts;
}

FamilySpec make_families(const CommonFlags& flags) {
  FamilySpec spec;
  if (!flags.families_dir.empty()) spec = load_family_dir(flags.families_dir);
  spec.include_odd_suns = flags.include_odd_suns;
  return spec;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail("io", "cannot write '" + out_path + "'");
  out << text;
}

json embedding_json(const Embedding& e) {
  json out = json::object();
  for (const auto& [from, to] : e) out[from] = to;
  return out;
}

json component_json(const ComponentReport& c) {
  json out;
  out["index"] = c.index;
  out["kind"] = component_kind_name(c.kind);
  out["word_representable"] = c.word_representable;
  if (!c.note.empty()) out["note"] = c.note;
  if (c.labeling) {
    json labels = json::object();
    for (const auto& [name, label] : c.labeling->label_of) labels[name] = label;
    out["labeling"] = labels;
    json descs = json::object();
    for (const auto& [name, d] : c.labeling->descriptors)
      descs[name] = descriptor_to_string(d);
    out["descriptors"] = descs;
  }
  if (c.word) out["word"] = word_to_string(*c.word);
  return out;
}

json verdict_json(const Verdict& v) {
  json out;
  out["word_representable"] = v.word_representable;
  out["components"] = json::array();
  for (const auto& c : v.components) out["components"].push_back(component_json(c));
  if (v.word) out["word"] = word_to_string(*v.word);
  return out;
}

WpcInput load_input(const std::string& graph_file, const std::string& tree_file) {
  WpcInput input;
  input.graph = load_graph_file(graph_file);
  if (!tree_file.empty()) {
    input.tree = load_partition_tree_file(tree_file);
    input.provenance = Provenance::UserCertified;
  }
  return input;
}

int run_decompose(const std::string& graph_file, const CommonFlags& flags) {
  Graph g = load_graph_file(graph_file);
  DecompositionTree t = minimalize(decompose(g));
  if (flags.format == "dot")
    std::cout << decomposition_to_dot(t);
  else if (flags.format == "structured") {
    json out;
    out["components"] = json::array();
    for (size_t i = 0; i < t.components.size(); ++i) {
      json c;
      c["kind"] = component_kind_name(t.kinds[i]);
      c["vertices"] = t.components[i].vertex_names();
      json edges = json::array();
      for (auto [u, v] : t.components[i].edge_list())
        edges.push_back({t.components[i].name_of(u), t.components[i].name_of(v)});
      c["edges"] = edges;
      out["components"].push_back(c);
    }
    out["marker_edges"] = json::array();
    for (const auto& [e1, e2] : t.marker_edges)
      out["marker_edges"].push_back(
          {{"component", e1.component}, {"marker", e1.marker},
           {"other_component", e2.component}, {"other_marker", e2.marker}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_text(t);
  }
  return kExitYes;
}

int run_recognize(const std::string& graph_file, const std::string& tree_file,
                  const CommonFlags& flags) {
  WpcInput input = load_input(graph_file, tree_file);
  Verdict v = recognize(input, make_options(flags));
  if (flags.format == "structured")
    std::cout << verdict_json(v).dump(2) << "\n";
  else
    std::cout << verdict_to_text(v);
  return v.word_representable ? kExitYes : kExitNo;
}

int run_repnum(const std::string& graph_file, const std::string& tree_file,
               const CommonFlags& flags) {
  WpcInput input = load_input(graph_file, tree_file);
  RepVerdict v = representation_number(input, make_families(flags), make_options(flags));
  if (flags.format == "structured") {
    json out;
    out["representation_number"] = rep_class_name(v.value);
    out["reason"] = v.reason;
    out["hits"] = json::array();
    for (const auto& hit : v.hits)
      out["hits"].push_back({{"member", hit.member},
                             {"embedding", embedding_json(hit.embedding)}});
    if (v.two_uniform_word)
      out["two_uniform_word"] = word_to_string(*v.two_uniform_word);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << rep_verdict_to_text(v);
  }
  return v.value == RepClass::TwoOrThree ? kExitBound : kExitYes;
}

int run_represent(const std::string& graph_file, const CommonFlags& flags) {
  Graph g = load_graph_file(graph_file);
  PipelineOptions opts = make_options(flags);
  std::optional<Word> found = find_k_uniform_word(g, 1, opts.oracle);
  bool exhaustive = true;
  for (int k = 2; k <= 3 && !found; ++k) {
    int cap = k == 2 ? opts.oracle.k2_max_n : opts.oracle.k3_max_n;
    if (g.n() <= cap)
      found = find_k_uniform_word(g, k, opts.oracle);
    else
      exhaustive = false;
  }
  if (found) {
    std::cout << "word: " << word_to_string(*found) << "\n";
    std::cout << "uniformity: " << *uniform_k(*found) << "\n";
    return kExitYes;
  }
  if (!exhaustive) {
    std::cout << "result: undecided (graph exceeds the oracle bound)\n";
    return kExitBound;
  }
  std::cout << "result: no uniform representing word with multiplicity at most 3\n";
  return kExitNo;
}

int run_verify_word(const std::string& graph_file, const std::string& word_text) {
  Graph g = load_graph_file(graph_file);
  Word w = parse_word(word_text);
  bool ok = represents(w, g);
  std::cout << "represents: " << (ok ? "yes" : "no") << "\n";
  return ok ? kExitYes : kExitNo;
}

Graph make_basic(const std::string& kind, int n) {
  if (n < 1) fail("invalid-argument", "size must be positive");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  if (kind == "clique") {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  } else if (kind == "path") {
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  } else if (kind == "cycle") {
    if (n < 3) fail("invalid-argument", "cycles need at least three vertices");
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, n - 1);
  } else if (kind == "star") {
    if (n < 2) fail("invalid-argument", "stars need at least two vertices");
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
  } else {
    fail("invalid-argument", "unknown generator kind '" + kind + "'");
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word-representability toolkit for split decompositions of "
               "well-partitioned chordal graphs"};
  app.require_subcommand(1);

  CommonFlags flags;
  app.add_option("--families", flags.families_dir,
                 "directory with a manifest.txt naming external family graphs");
  app.add_option("--oracle-bound", flags.oracle_bound,
                 "vertex cap for the uniform-word searches (defaults: 8 for "
                 "2-uniform, 6 for 3-uniform)");
  app.add_option("--k-max", flags.k_max, "largest sun parameter scanned (default 12)");
  app.add_option("--seed", flags.seed, "64-bit generator seed (default 0)");
  app.add_option("--format", flags.format, "text, dot or structured")
      ->check(CLI::IsMember({"text", "dot", "structured"}));
  app.add_flag("--include-odd-suns", flags.include_odd_suns,
               "scan odd suns as well as even ones");

  std::string graph_file, tree_file, word_text, kind, out_path, tree_out_path;
  int size = 0;

  auto* cmd_decompose = app.add_subcommand("decompose", "minimal split decomposition");
  cmd_decompose->add_option("graph-file", graph_file)->required();

  auto* cmd_recognize =
      app.add_subcommand("recognize", "decide word-representability");
  cmd_recognize->add_option("graph-file", graph_file)->required();
  cmd_recognize->add_option("tree-file", tree_file);

  auto* cmd_repnum =
      app.add_subcommand("repnum", "classify the representation number");
  cmd_repnum->add_option("graph-file", graph_file)->required();
  cmd_repnum->add_option("tree-file", tree_file);

  auto* cmd_represent =
      app.add_subcommand("represent", "search for a uniform representing word");
  cmd_represent->add_option("graph-file", graph_file)->required();

  auto* cmd_verify =
      app.add_subcommand("verify-word", "check a word against a graph");
  cmd_verify->add_option("graph-file", graph_file)->required();
  cmd_verify->add_option("word", word_text, "space-separated letters")->required();

  auto* cmd_generate = app.add_subcommand(
      "generate", "emit a named graph (even-sun k | w1..w4 | random-wpc | "
                  "clique n | star n | cycle n | path n)");
  cmd_generate->add_option("kind", kind)->required();
  cmd_generate->add_option("size", size, "parameter for sized kinds");
  cmd_generate->add_option("--out", out_path, "graph output file (default stdout)");
  cmd_generate->add_option("--tree-out", tree_out_path,
                           "partition tree output file (random-wpc)");
  int gen_min_bags = 2, gen_max_bags = 12, gen_max_bag_size = 5, gen_max_vertices = 60;
  cmd_generate->add_option("--min-bags", gen_min_bags);
  cmd_generate->add_option("--max-bags", gen_max_bags);
  cmd_generate->add_option("--max-bag-size", gen_max_bag_size);
  cmd_generate->add_option("--max-vertices", gen_max_vertices);

  auto* cmd_check_tree =
      app.add_subcommand("check-tree", "verify a partition tree against a graph");
  cmd_check_tree->add_option("graph-file", graph_file)->required();
  cmd_check_tree->add_option("tree-file", tree_file)->required();

  auto* cmd_comparability = app.add_subcommand(
      "comparability", "comparability and permutation-representation report");
  cmd_comparability->add_option("graph-file", graph_file)->required();
  cmd_comparability->add_option("tree-file", tree_file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_decompose->parsed()) return run_decompose(graph_file, flags);
    if (cmd_recognize->parsed()) return run_recognize(graph_file, tree_file, flags);
    if (cmd_repnum->parsed()) return run_repnum(graph_file, tree_file, flags);
    if (cmd_represent->parsed()) return run_represent(graph_file, flags);
    if (cmd_verify->parsed()) return run_verify_word(graph_file, word_text);
    if (cmd_check_tree->parsed()) {
      Graph g = load_graph_file(graph_file);
      PartitionTree t = load_partition_tree_file(tree_file);
      TreeReport report = verify_partition_tree(g, t);
      if (report.ok) {
        std::cout << "valid: yes\n";
        std::cout << "star-with-singleton-leaves: "
                  << (is_star_partition_tree(t) ? "yes" : "no") << "\n";
        return kExitYes;
      }
      std::cout << "valid: no\ncondition: " << report.condition
                << "\ndetail: " << report.detail << "\n";
      return kExitNo;
    }
    if (cmd_comparability->parsed()) {
      WpcInput input = load_input(graph_file, tree_file);
      ComparabilityVerdict v =
          comparability(input, make_families(flags), make_options(flags));
      std::cout << comparability_to_text(v);
      return v.value == ComparabilityAnswer::Yes ? kExitYes : kExitNo;
    }
    if (cmd_generate->parsed()) {
      if (kind == "random-wpc") {
        RandomTreeParams params{gen_min_bags, gen_max_bags, gen_max_bag_size,
                                gen_max_vertices};
        CertifiedGraph cg = random_partition_tree(params, flags.seed);
        if (tree_out_path.empty())
          fail("invalid-argument", "random-wpc needs --tree-out for its certificate");
        write_output(flags.format == "dot" ? graph_to_dot(cg.graph)
                                           : to_edge_list(cg.graph),
                     out_path);
        save_partition_tree_file(cg.tree, tree_out_path);
        return kExitYes;
      }
      Graph g;
      if (kind == "even-sun")
        g = generate_even_sun(size);
      else if (kind == "w1" || kind == "w2" || kind == "w3" || kind == "w4")
        g = generate_w(kind[1] - '0');
      else
        g = make_basic(kind, size);
      write_output(flags.format == "dot" ? graph_to_dot(g) : to_edge_list(g), out_path);
      return kExitYes;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == "not-wpc") return kExitNotWpc;
    if (e.kind() == "oracle-bound") return kExitBound;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
