#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mecs/deadline.hpp"
#include "mecs/graph.hpp"

namespace mecs {

enum class Verdict { Yes, No };

const char* to_string(Verdict v);

struct MecsSolution {
    Verdict verdict = Verdict::No;
    EdgeColoring witness;        // meaningful when verdict is Yes
    std::optional<int> optimum;  // set by engines that compute it

    bool yes() const { return verdict == Verdict::Yes; }
};

struct OracleOptions {
    int edge_cap = 24;
    Deadline deadline;
};

MecsSolution solve_exact(const MecsInstance& inst, const OracleOptions& opts = {});

int chromatic_index_exact(const Graph& g, const OracleOptions& opts = {});

// Total proper coloring of the edges flagged in `active` with colors 1..p, if one exists.
std::optional<std::vector<int>> find_edge_coloring(const Graph& g, int p, const std::vector<char>& active,
                                                   const Deadline& deadline = {});
std::optional<EdgeColoring> find_edge_coloring(const Graph& g, int p, const Deadline& deadline = {});

// Visits every proper total coloring with colors 1..p that agrees with the nonzero
// entries of `fixed`. The visitor returns false to stop early. Returns the number visited.
std::uint64_t enumerate_edge_colorings(const Graph& g, int p, const std::vector<int>& fixed,
                                       const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace mecs
