#pragma once

#include <iosfwd>
#include <string>

#include "wordrep/graph.hpp"
#include "wordrep/split_decomposition.hpp"
#include "wordrep/wpc.hpp"

namespace wordrep {

// Edge-list text: lines starting '#' are comments; "u v" declares an edge
// (vertices implied by first appearance); a single token declares an
// isolated vertex. Errors carry line numbers.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(const std::string& text);
Graph load_graph_file(const std::string& path);
std::string to_edge_list(const Graph& g);
void save_graph_file(const Graph& g, const std::string& path);

std::string graph_to_dot(const Graph& g);

// Partition-tree text: "bag <id> <vertex>..." and "edge <id> <id>"
// records; ids are arbitrary tokens mapped to bag indices in order of
// appearance. Structural errors are line-precise.
PartitionTree parse_partition_tree(std::istream& in);
PartitionTree parse_partition_tree_text(const std::string& text);
PartitionTree load_partition_tree_file(const std::string& path);
std::string to_text(const PartitionTree& t);
void save_partition_tree_file(const PartitionTree& t, const std::string& path);

std::string to_text(const DecompositionTree& t);
std::string decomposition_to_dot(const DecompositionTree& t);

}  // namespace wordrep
