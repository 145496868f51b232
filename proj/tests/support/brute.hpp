#pragma once

// Exhaustive reference implementations used only by tests. They share no code
// with the library algorithms and trade speed for obviousness.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mecs/fpt.hpp"
#include "mecs/graph.hpp"

namespace brute {

using mecs::Edge;
using mecs::Graph;

inline bool share_endpoint(const Edge& a, const Edge& b) {
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

inline bool is_matching_mask(const Graph& g, std::uint32_t mask) {
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!(mask >> i & 1)) continue;
        for (int j = i + 1; j < g.edge_count(); ++j) {
            if ((mask >> j & 1) && share_endpoint(g.edge(i), g.edge(j))) return false;
        }
    }
    return true;
}

inline int max_matching_size(const Graph& g) {
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.edge_count()); ++mask) {
        if (std::popcount(mask) > best && is_matching_mask(g, mask)) best = std::popcount(mask);
    }
    return best;
}

inline int min_vertex_cover_size(const Graph& g) {
    int best = g.vertex_count();
    for (std::uint32_t set = 0; set < (std::uint32_t{1} << g.vertex_count()); ++set) {
        bool covers = true;
        for (const Edge& e : g.edges()) covers = covers && ((set >> e.u & 1) || (set >> e.v & 1));
        if (covers) best = std::min(best, std::popcount(set));
    }
    return best;
}

// Tries every assignment of colors 1..p to the chosen edges, in edge order.
inline bool colorable(const Graph& g, const std::vector<int>& edges, int p) {
    std::vector<int> color(edges.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == edges.size()) return true;
        for (int c = 1; c <= p; ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                ok = !(color[j] == c && share_endpoint(g.edge(edges[i]), g.edge(edges[j])));
            }
            if (!ok) continue;
            color[i] = c;
            if (self(self, i + 1)) return true;
        }
        color[i] = 0;
        return false;
    };
    return rec(rec, 0);
}

// Largest p-edge-colorable edge subset, over all 2^m subsets.
inline int mecs_optimum(const Graph& g, int p) {
    const int m = g.edge_count();
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });
    for (std::uint32_t mask : masks) {
        std::vector<int> edges;
        for (int i = 0; i < m; ++i) {
            if (mask >> i & 1) edges.push_back(i);
        }
        // Degree filter first: a vertex of degree > p rules the subset out.
        std::vector<int> deg(g.vertex_count(), 0);
        bool ok = true;
        for (int e : edges) ok = ok && ++deg[g.edge(e).u] <= p && ++deg[g.edge(e).v] <= p;
        if (ok && colorable(g, edges, p)) return static_cast<int>(edges.size());
    }
    return 0;
}

inline int chromatic_index(const Graph& g) {
    std::vector<int> all(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) all[i] = i;
    int p = 0;
    while (!colorable(g, all, p)) ++p;
    return p;
}

inline bool has_rainbow_matching(const mecs::LabeledGraph& lg, int k) {
    const Graph& g = lg.graph;
    if (k == 0) return true;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.edge_count()); ++mask) {
        if (std::popcount(mask) != k || !is_matching_mask(g, mask)) continue;
        std::vector<int> labels;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (mask >> i & 1) labels.push_back(lg.labels[i]);
        }
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) == labels.end()) return true;
    }
    return false;
}

// Smallest X with max degree of g - X at most 1.
inline int min_deg1_modulator_size(const Graph& g) {
    int best = g.vertex_count();
    for (std::uint32_t set = 0; set < (std::uint32_t{1} << g.vertex_count()); ++set) {
        std::vector<int> deg(g.vertex_count(), 0);
        for (const Edge& e : g.edges()) {
            if (!(set >> e.u & 1) && !(set >> e.v & 1)) {
                ++deg[e.u];
                ++deg[e.v];
            }
        }
        if (std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 1; })) best = std::min(best, std::popcount(set));
    }
    return best;
}

// Graph on n vertices keeping each pair independently with probability 1/2, then truncated to max_edges.
inline Graph random_graph(std::mt19937_64& rng, int n, int max_edges) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    }
    for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng() % i]);
    const int m = static_cast<int>(rng() % (std::min<std::size_t>(all.size(), max_edges) + 1));
    all.resize(m);
    return Graph(n, all);
}

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    std::vector<Edge> es;
    for (auto [u, v] : edges) es.push_back({u, v});
    return Graph(n, es);
}

inline Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    }
    return Graph(n, es);
}

inline Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    es.push_back({0, n - 1});
    return Graph(n, es);
}

inline Graph path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, es);
}

inline Graph star(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
    return Graph(leaves + 1, es);
}

}  // namespace brute
