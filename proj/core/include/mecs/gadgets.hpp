#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mecs/graph.hpp"

namespace mecs {

// Hanging edge names of a module, in port order.
enum Port : int { kPortA = 0, kPortB = 1, kPortC = 2, kPortD = 3, kPortE = 4 };

// Seven vertices of one module; port[i] is the vertex carrying hanging edge i.
struct ModuleVertices {
    std::array<Vertex, 7> vertices{};
    std::array<Vertex, 5> port{};
};

class GraphBuilder {
public:
    Vertex add_vertex() { return n_++; }
    EdgeId add_edge(Vertex u, Vertex v);
    ModuleVertices add_module();
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    Graph build() const { return Graph(n_, edges_); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Internal module edges over local vertex ids 0..6; hanging edge i leaves local vertex i.
const std::array<std::pair<int, int>, 8>& module_wiring();

using PortPair = std::array<Vertex, 2>;

struct RedGadget {
    std::vector<ModuleVertices> modules;  // cell j holds modules 2j and 2j+1
    std::vector<PortPair> outputs;        // outputs[0] is reserved for r
};

struct BlueGadget {
    std::vector<Vertex> cycle;  // cycle[0] is adjacent to b
    std::vector<ModuleVertices> modules;
    std::vector<PortPair> inputs;
    std::vector<Vertex> pendants;  // private endpoints of the e edges
};

RedGadget add_red_gadget(GraphBuilder& b, int degree);
BlueGadget add_blue_gadget(GraphBuilder& b, int degree, Vertex blue);

// Stand-alone fragments whose open hanging edges end in private degree-1 vertices.
struct Fragment {
    Graph graph;
    std::vector<std::array<EdgeId, 2>> pairs;  // module: unused; red: outputs 0..d; blue: inputs
    std::array<EdgeId, 5> hanging{};           // module only
};

Fragment build_module();
Fragment build_red_gadget(int degree, bool modified);
Fragment build_blue_gadget(int degree);

struct RbdsInstance {
    int red = 0;
    int blue = 0;
    std::vector<std::pair<int, int>> edges;  // (red, blue)
    int k = 0;
};

void validate_rbds(const RbdsInstance& inst);
bool rbds_brute_force(const RbdsInstance& inst);

struct RedLayout {
    Vertex r = -1;
    RedGadget gadget;
    PortPair r_ports{};
};

struct BlueLayout {
    Vertex b = -1;
    BlueGadget gadget;
};

struct PairLink {
    int rbds_edge = 0;
    int red = 0;
    int output = 0;  // index into the red gadget's outputs (>= 1)
    int blue = 0;
    int input = 0;   // index into the blue gadget's inputs
    std::array<EdgeId, 2> edges{};
};

struct GadgetLayout {
    MecsInstance mecs;
    std::vector<RedLayout> red;
    std::vector<BlueLayout> blue;
    std::vector<PairLink> links;
    std::vector<Vertex> internal;  // vertices required to have degree 3
};

// Vertices 0..|R|-1 are red, |R|..|R|+|B|-1 blue, gadget vertices follow.
GadgetLayout reduce_rbds(const RbdsInstance& inst);

// Splits each listed red vertex r into r (keeping its first edge) and a new vertex
// (taking the second); new vertices are appended in list order.
Graph modify_at(const GadgetLayout& layout, const std::vector<int>& red_subset);

struct ClaimResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::uint64_t colorings = 0;
    std::string detail;
};

std::vector<ClaimResult> verify_claims();

}  // namespace mecs
