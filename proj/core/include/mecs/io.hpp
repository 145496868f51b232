#pragma once

#include <iosfwd>
#include <string>

#include "mecs/fpt.hpp"
#include "mecs/gadgets.hpp"
#include "mecs/graph.hpp"

namespace mecs {

// Graph text format: "n m", then m lines "u v" with u < v; lines starting with '#' are comments.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// Coloring format: one "u v c" line per colored edge, in edge order.
void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c);
EdgeColoring read_coloring(std::istream& in, const Graph& g, int p);

// Labeled graph format: "n m", then m lines "u v label".
void write_labeled_graph(std::ostream& out, const LabeledGraph& lg);
LabeledGraph read_labeled_graph(std::istream& in);

// RBDS format: "|R| |B| m k", then m lines "r b".
RbdsInstance read_rbds(std::istream& in);
RbdsInstance read_rbds_file(const std::string& path);
void write_rbds(std::ostream& out, const RbdsInstance& inst);

}  // namespace mecs
