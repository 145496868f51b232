#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mecs/graph.hpp"

namespace mecs {

enum class Rule { RR1, RR2 };

const char* to_string(Rule r);

struct KernelStep {
    Rule rule = Rule::RR1;
    std::vector<Vertex> deleted;  // vertex ids of the instance the rule was applied to
    int l_decrease = 0;
};

// An applied rule: the reduced instance, its modulator, and origin[i] = id of
// reduced vertex i in the input instance.
struct RuleApplication {
    MecsInstance instance;
    std::vector<Vertex> modulator;
    std::vector<Vertex> origin;
    KernelStep step;
};

std::optional<RuleApplication> rule1_drop_isolated_components(const MecsInstance& inst,
                                                              const std::vector<Vertex>& x);

// Left side 0..left-1 (modulator vertices), right side 0..right-1 (components).
struct BipartiteGraph {
    int left = 0;
    int right = 0;
    std::vector<std::vector<int>> adj;  // left -> sorted right neighbors
};

struct ExpansionResult {
    std::vector<int> x_prime;
    std::vector<int> c_prime;
    std::vector<std::pair<int, int>> expansion_edges;  // (left, right)
};

std::optional<ExpansionResult> find_expansion(const BipartiteGraph& b, int t);

std::optional<RuleApplication> rule2_expansion_delete(const MecsInstance& inst, const std::vector<Vertex>& x);

struct KernelTrace {
    MecsInstance original;
    MecsInstance final_instance;
    std::vector<KernelStep> steps;   // deleted ids are original vertex ids
    std::vector<Vertex> modulator;   // original ids
    std::vector<Vertex> final_modulator;  // ids in final_instance
    std::vector<Vertex> origin;      // final vertex -> original vertex
    bool early_yes = false;
    bool early_no = false;
};

KernelTrace kernelize(const MecsInstance& inst);

// The constant-size YES instance used for early exits: one edge, l = 1, p = 1.
MecsInstance vacuous_yes_instance();

// Constant-size NO instance: no vertices, l = 1, p = 1.
MecsInstance vacuous_no_instance();

}  // namespace mecs
