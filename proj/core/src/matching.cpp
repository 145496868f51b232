#include "mecs/matching.hpp"

#include <algorithm>
#include <queue>

namespace mecs {

namespace {

class Blossom {
public:
    Blossom(int n, const std::vector<std::vector<Vertex>>& adj)
        : n_(n), adj_(adj), mate_(n, -1), parent_(n), base_(n), used_(n), in_blossom_(n) {}

    std::vector<Vertex> run() {
        for (Vertex root = 0; root < n_; ++root) {
            if (mate_[root] != -1) continue;
            Vertex v = find_path(root);
            while (v != -1) {
                Vertex pv = parent_[v];
                Vertex next = mate_[pv];
                mate_[v] = pv;
                mate_[pv] = v;
                v = next;
            }
        }
        return mate_;
    }

private:
    Vertex lca(Vertex a, Vertex b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    Vertex find_path(Vertex root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (Vertex i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = true;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex to : adj_[v]) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    Vertex cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (Vertex i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    used_[mate_[to]] = true;
                    q.push(mate_[to]);
                }
            }
        }
        return -1;
    }

    int n_;
    const std::vector<std::vector<Vertex>>& adj_;
    std::vector<Vertex> mate_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

Matching matching_from_mates(const Graph& g, const std::vector<Vertex>& mate, std::span<const EdgeId> edges) {
    Matching m;
    for (EdgeId e : edges) {
        const Edge& ed = g.edge(e);
        if (mate[ed.u] == ed.v) m.edges.push_back(e);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

bool cover_branch(const Graph& g, std::vector<bool>& in_cover, int budget, std::vector<Vertex>& chosen) {
    for (const Edge& e : g.edges()) {
        if (in_cover[e.u] || in_cover[e.v]) continue;
        if (budget == 0) return false;
        for (Vertex pick : {e.u, e.v}) {
            in_cover[pick] = true;
            chosen.push_back(pick);
            if (cover_branch(g, in_cover, budget - 1, chosen)) return true;
            chosen.pop_back();
            in_cover[pick] = false;
        }
        return false;
    }
    return true;
}

}  // namespace

Matching max_matching(const Graph& g) {
    std::vector<EdgeId> all(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) all[e] = e;
    return max_matching(g, all);
}

Matching max_matching(const Graph& g, std::span<const EdgeId> edges) {
    std::vector<std::vector<Vertex>> adj(g.vertex_count());
    for (EdgeId e : edges) {
        const Edge& ed = g.edge(e);
        adj[ed.u].push_back(ed.v);
        adj[ed.v].push_back(ed.u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    Blossom b(g.vertex_count(), adj);
    return matching_from_mates(g, b.run(), edges);
}

std::optional<std::vector<Vertex>> min_vertex_cover(const Graph& g, int limit) {
    int lower = static_cast<int>(max_matching(g).size());
    for (int k = lower; k <= limit; ++k) {
        std::vector<bool> in_cover(g.vertex_count(), false);
        std::vector<Vertex> chosen;
        if (cover_branch(g, in_cover, k, chosen)) {
            std::sort(chosen.begin(), chosen.end());
            return chosen;
        }
    }
    return std::nullopt;
}

std::vector<Vertex> min_vertex_cover(const Graph& g) {
    return *min_vertex_cover(g, g.vertex_count());
}

}  // namespace mecs
