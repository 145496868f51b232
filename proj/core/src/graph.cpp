#include "mecs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mecs {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(n, {});
    inc_.assign(n, {});
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n) {
            throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
        }
        if (e.u == e.v) throw std::invalid_argument("edge " + std::to_string(i) + " is a self-loop");
        if (!seen.emplace(e.u, e.v).second) {
            throw std::invalid_argument("edge " + std::to_string(i) + " duplicates an earlier edge");
        }
    }
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> tmp(n);
    for (EdgeId i = 0; i < edge_count(); ++i) {
        tmp[edges_[i].u].emplace_back(edges_[i].v, i);
        tmp[edges_[i].v].emplace_back(edges_[i].u, i);
    }
    for (Vertex v = 0; v < n; ++v) {
        std::sort(tmp[v].begin(), tmp[v].end());
        adj_[v].reserve(tmp[v].size());
        inc_[v].reserve(tmp[v].size());
        for (auto [w, e] : tmp[v]) {
            adj_[v].push_back(w);
            inc_[v].push_back(e);
        }
    }
}

int Graph::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
    const auto& nb = adj_[a];
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return inc_[a][it - nb.begin()];
}

VertexDeletion delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    std::vector<bool> gone(g.vertex_count(), false);
    for (Vertex v : removed) gone[v] = true;
    std::vector<Vertex> fresh(g.vertex_count(), -1);
    VertexDeletion out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!gone[v]) {
            fresh[v] = static_cast<Vertex>(out.origin.size());
            out.origin.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (!gone[e.u] && !gone[e.v]) edges.push_back({fresh[e.u], fresh[e.v]});
    }
    out.graph = Graph(static_cast<int>(out.origin.size()), std::move(edges));
    return out;
}

Graph edge_subgraph(const Graph& g, std::span<const EdgeId> kept) {
    std::vector<Edge> edges;
    edges.reserve(kept.size());
    for (EdgeId e : kept) edges.push_back(g.edge(e));
    return Graph(g.vertex_count(), std::move(edges));
}

bool is_matching(const Graph& g, std::span<const EdgeId> edges) {
    std::vector<bool> used(g.vertex_count(), false);
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.edge_count()) return false;
        const Edge& ed = g.edge(e);
        if (used[ed.u] || used[ed.v]) return false;
        used[ed.u] = used[ed.v] = true;
    }
    return true;
}

EdgeColoring::EdgeColoring(int edge_count, int p) : p_(p), colors_(edge_count, 0) {
    if (p < 1) throw std::invalid_argument("color budget must be positive");
}

int EdgeColoring::colored_count() const {
    return static_cast<int>(std::count_if(colors_.begin(), colors_.end(), [](int c) { return c != 0; }));
}

std::vector<EdgeId> EdgeColoring::colored_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edge_count(); ++e) {
        if (colors_[e] != 0) out.push_back(e);
    }
    return out;
}

std::vector<int> EdgeColoring::class_sizes() const {
    std::vector<int> sizes(p_ + 1, 0);
    for (int c : colors_) {
        if (c >= 1 && c <= p_) ++sizes[c];
    }
    return sizes;
}

int EdgeColoring::colors_used() const {
    auto sizes = class_sizes();
    return static_cast<int>(std::count_if(sizes.begin() + 1, sizes.end(), [](int s) { return s > 0; }));
}

ColoringCheck verify_coloring(const EdgeColoring& c, const Graph& g) {
    ColoringCheck r;
    if (c.edge_count() != g.edge_count()) {
        r.ok = false;
        r.message = "coloring covers " + std::to_string(c.edge_count()) + " edges, graph has " +
                    std::to_string(g.edge_count());
        return r;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int col = c.color(e);
        if (col < 0 || col > c.p()) {
            r.ok = false;
            r.message = "edge " + std::to_string(e) + " has color " + std::to_string(col) + " outside 1.." +
                        std::to_string(c.p());
            r.conflict = std::make_pair(e, e);
            return r;
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto inc = g.incident_edges(v);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            if (c.color(inc[i]) == 0) continue;
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                if (c.color(inc[i]) == c.color(inc[j])) {
                    EdgeId a = std::min(inc[i], inc[j]);
                    EdgeId b = std::max(inc[i], inc[j]);
                    if (!r.conflict || std::make_pair(a, b) < *r.conflict) r.conflict = std::make_pair(a, b);
                }
            }
        }
    }
    if (r.conflict) {
        r.ok = false;
        auto [a, b] = *r.conflict;
        r.message = "edges " + std::to_string(a) + " and " + std::to_string(b) + " share an endpoint and color " +
                    std::to_string(c.color(a));
    }
    return r;
}

void validate_instance(const MecsInstance& inst) {
    if (inst.p < 1) throw std::invalid_argument("p must be at least 1");
    if (inst.l < 0) throw std::invalid_argument("l must be non-negative");
}

}  // namespace mecs
