#include "wordrep/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace wordrep {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void format_fail(int line_no, const std::string& what) {
  fail("format", "line " + std::to_string(line_no) + ": " + what);
}

std::string dot_quote(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  Graph g;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() == 1) {
      g.ensure_vertex(toks[0]);
    } else if (toks.size() == 2) {
      if (toks[0] == toks[1]) format_fail(line_no, "self-loop at '" + toks[0] + "'");
      int u = g.ensure_vertex(toks[0]);
      int v = g.ensure_vertex(toks[1]);
      g.add_edge(u, v);
    } else {
      format_fail(line_no, "expected 'u v' or a single isolated vertex");
    }
  }
  return g;
}

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("io", "cannot open graph file '" + path + "'");
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) out << g.name_of(v) << "\n";
  for (auto [u, v] : g.edge_list())
    out << g.name_of(u) << " " << g.name_of(v) << "\n";
  return out.str();
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("io", "cannot write graph file '" + path + "'");
  out << to_edge_list(g);
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) out << "  " << dot_quote(g.name_of(v)) << ";\n";
  for (auto [u, v] : g.edge_list())
    out << "  " << dot_quote(g.name_of(u)) << " -- " << dot_quote(g.name_of(v)) << ";\n";
  out << "}\n";
  return out.str();
}

PartitionTree parse_partition_tree(std::istream& in) {
  PartitionTree t;
  std::map<std::string, int> bag_ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "bag") {
      if (toks.size() < 3) format_fail(line_no, "bag record needs an id and vertices");
      if (bag_ids.count(toks[1])) format_fail(line_no, "duplicate bag id '" + toks[1] + "'");
      bag_ids[toks[1]] = static_cast<int>(t.bags.size());
      t.bags.emplace_back(toks.begin() + 2, toks.end());
    } else if (toks[0] == "edge") {
      if (toks.size() != 3) format_fail(line_no, "edge record needs exactly two bag ids");
      for (int i : {1, 2})
        if (!bag_ids.count(toks[i]))
          format_fail(line_no, "unknown bag id '" + toks[i] + "'");
      if (toks[1] == toks[2]) format_fail(line_no, "edge loops on bag '" + toks[1] + "'");
      t.tree_edges.emplace_back(bag_ids[toks[1]], bag_ids[toks[2]]);
    } else {
      format_fail(line_no, "expected a 'bag' or 'edge' record, got '" + toks[0] + "'");
    }
  }
  if (t.bags.empty()) fail("format", "partition tree file declares no bags");
  return t;
}

PartitionTree parse_partition_tree_text(const std::string& text) {
  std::istringstream in(text);
  return parse_partition_tree(in);
}

PartitionTree load_partition_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("io", "cannot open partition tree file '" + path + "'");
  return parse_partition_tree(in);
}

std::string to_text(const PartitionTree& t) {
  std::ostringstream out;
  for (size_t i = 0; i < t.bags.size(); ++i) {
    out << "bag " << i;
    for (const auto& name : t.bags[i]) out << " " << name;
    out << "\n";
  }
  for (auto [a, b] : t.tree_edges) out << "edge " << a << " " << b << "\n";
  return out.str();
}

void save_partition_tree_file(const PartitionTree& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("io", "cannot write partition tree file '" + path + "'");
  out << to_text(t);
}

std::string to_text(const DecompositionTree& t) {
  std::ostringstream out;
  out << "components " << t.components.size() << "\n";
  for (size_t i = 0; i < t.components.size(); ++i) {
    const Graph& c = t.components[i];
    out << "component " << i << " " << component_kind_name(t.kinds[i]) << "\n";
    out << "vertices";
    for (const auto& name : c.vertex_names()) out << " " << name;
    out << "\n";
    for (auto [u, v] : c.edge_list())
      out << "edge " << c.name_of(u) << " " << c.name_of(v) << "\n";
  }
  for (const auto& [e1, e2] : t.marker_edges)
    out << "marker-edge " << e1.component << " " << e1.marker << " " << e2.component
        << " " << e2.marker << "\n";
  return out.str();
}

std::string decomposition_to_dot(const DecompositionTree& t) {
  std::ostringstream out;
  out << "graph decomposition {\n";
  for (size_t i = 0; i < t.components.size(); ++i) {
    const Graph& c = t.components[i];
    out << "  subgraph cluster_" << i << " {\n";
    out << "    label=\"component " << i << " (" << component_kind_name(t.kinds[i])
        << ")\";\n";
    for (const auto& name : c.vertex_names())
      out << "    " << dot_quote(name) << ";\n";
    for (auto [u, v] : c.edge_list())
      out << "    " << dot_quote(c.name_of(u)) << " -- " << dot_quote(c.name_of(v))
          << ";\n";
    out << "  }\n";
  }
  for (const auto& [e1, e2] : t.marker_edges)
    out << "  " << dot_quote(e1.marker) << " -- " << dot_quote(e2.marker)
        << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace wordrep
