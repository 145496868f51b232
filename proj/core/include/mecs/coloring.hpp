#pragma once

#include "mecs/graph.hpp"

namespace mecs {

// Total proper coloring with colors 1..max_degree+1 (Misra-Gries fan recoloring).
EdgeColoring vizing_color(const Graph& g);

// Same colored edge set, proper, all class sizes within one of each other.
EdgeColoring rebalance(const EdgeColoring& c, const Graph& g);

}  // namespace mecs
