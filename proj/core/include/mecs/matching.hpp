#pragma once

#include <span>

#include "mecs/graph.hpp"

namespace mecs {

// Maximum cardinality matching (Edmonds' blossom algorithm). Edge ids ascending.
Matching max_matching(const Graph& g);

// Maximum matching of the spanning subgraph formed by `edges`; ids refer to g.
Matching max_matching(const Graph& g, std::span<const EdgeId> edges);

// Minimum vertex cover, sorted. Returns nullopt if every cover is larger than limit.
std::optional<std::vector<Vertex>> min_vertex_cover(const Graph& g, int limit);
std::vector<Vertex> min_vertex_cover(const Graph& g);

}  // namespace mecs
