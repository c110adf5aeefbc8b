#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Enumerates every transitive orientation of g by edge backtracking with
// forcing: orienting a->b forces a->c across each non-edge bc with ac an
// edge, and forces transitive completions. fn receives the oriented edges
// as (from, to) index pairs; returning false stops the enumeration.
void for_each_transitive_orientation(
    const Graph& g, const std::function<bool(const std::vector<std::pair<int, int>>&)>& fn);

// First transitive orientation, or none (exhaustive proof of
// non-comparability) as (from, to) index pairs.
std::optional<std::vector<std::pair<int, int>>> find_transitive_orientation(const Graph& g);

}  // namespace wordrep
