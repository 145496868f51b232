#pragma once

#include <vector>

#include "mecs/graph.hpp"

namespace mecs {

// Greedy P3 packing: |X| <= 3 * optimum and max degree of g - X at most 1.
std::vector<Vertex> deg1_modulator_3approx(const Graph& g);

// Drops members of X (highest index first) that are not needed for max degree <= 1.
std::vector<Vertex> minimalize_modulator(const Graph& g, std::vector<Vertex> x);

bool is_deg1_modulator(const Graph& g, const std::vector<Vertex>& x);

struct Precheck {
    bool yes = false;
    EdgeColoring witness;
    int mm = 0;
    int second_matching = 0;
    bool vc_bound_holds = false;
    bool modulator_bound_holds = false;
};

Precheck parameter_precheck(const MecsInstance& inst);

}  // namespace mecs
