#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mecs {

using Vertex = int;
using EdgeId = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool operator==(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1. Edge i is the i-th inserted
// pair, stored with u < v. Adjacency lists are sorted by neighbor.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    // Incident edge ids, ordered like neighbors(v).
    std::span<const EdgeId> incident_edges(Vertex v) const { return inc_[v]; }

    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<EdgeId>> inc_;
};

// Result of deleting vertices: origin[i] is the old id of new vertex i.
struct VertexDeletion {
    Graph graph;
    std::vector<Vertex> origin;
};

VertexDeletion delete_vertices(const Graph& g, std::span<const Vertex> removed);

// Same vertex set, only the listed edges; edge i of the result is g's edge kept[i].
Graph edge_subgraph(const Graph& g, std::span<const EdgeId> kept);

struct Matching {
    std::vector<EdgeId> edges;

    std::size_t size() const { return edges.size(); }
};

bool is_matching(const Graph& g, std::span<const EdgeId> edges);

// Partial map edge -> color in 1..p; 0 means uncolored.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(int edge_count, int p);

    int p() const { return p_; }
    int edge_count() const { return static_cast<int>(colors_.size()); }

    int color(EdgeId e) const { return colors_[e]; }
    bool is_colored(EdgeId e) const { return colors_[e] != 0; }
    void assign(EdgeId e, int c) { colors_[e] = c; }
    void clear(EdgeId e) { colors_[e] = 0; }

    int colored_count() const;
    std::vector<EdgeId> colored_edges() const;
    // Index c holds the size of color class c; index 0 is unused.
    std::vector<int> class_sizes() const;
    int colors_used() const;

    const std::vector<int>& colors() const { return colors_; }

private:
    int p_ = 1;
    std::vector<int> colors_;
};

struct ColoringCheck {
    bool ok = true;
    std::string message;
    std::optional<std::pair<EdgeId, EdgeId>> conflict;

    explicit operator bool() const { return ok; }
};

ColoringCheck verify_coloring(const EdgeColoring& c, const Graph& g);

struct MecsInstance {
    Graph graph;
    int l = 0;
    int p = 1;
};

void validate_instance(const MecsInstance& inst);

}  // namespace mecs
