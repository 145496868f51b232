#pragma once

#include <cstdint>

#include "mecs/fpt.hpp"
#include "mecs/gadgets.hpp"
#include "mecs/graph.hpp"

namespace mecs::cli {

// Uniform over all graphs with n vertices and min(m, n(n-1)/2) edges; edges sorted.
Graph random_graph(int n, int m, CounterRng& rng);
Graph star_graph(int leaves);
Graph cycle_graph(int n);
// Every blue vertex gets 1..max_degree distinct red neighbors; leftover red vertices get one blue neighbor.
RbdsInstance random_rbds(int red, int blue, int max_degree, int k, CounterRng& rng);

}  // namespace mecs::cli
