#include "mecs/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace mecs {

namespace {

class FanColorer {
public:
    explicit FanColorer(const Graph& g)
        : g_(g), colors_(std::max(1, g.max_degree() + 1)), at_(g.vertex_count(), std::vector<EdgeId>(colors_ + 1, -1)),
          color_(g.edge_count(), 0) {}

    EdgeColoring run() {
        for (EdgeId e = 0; e < g_.edge_count(); ++e) color_edge(e);
        EdgeColoring out(g_.edge_count(), colors_);
        for (EdgeId e = 0; e < g_.edge_count(); ++e) out.assign(e, color_[e]);
        return out;
    }

private:
    bool is_free(Vertex v, int c) const { return at_[v][c] == -1; }

    int lowest_free(Vertex v) const {
        for (int c = 1; c <= colors_; ++c) {
            if (is_free(v, c)) return c;
        }
        throw std::logic_error("no free color at vertex");
    }

    void set(EdgeId e, int c) {
        const Edge& ed = g_.edge(e);
        if (color_[e] != 0) {
            at_[ed.u][color_[e]] = -1;
            at_[ed.v][color_[e]] = -1;
        }
        color_[e] = c;
        if (c != 0) {
            at_[ed.u][c] = e;
            at_[ed.v][c] = e;
        }
    }

    EdgeId edge_between(Vertex a, Vertex b) const { return *g_.find_edge(a, b); }

    // Swap colors c and d on the maximal path starting at u through its d-edge.
    void invert_path(Vertex u, int c, int d) {
        std::vector<EdgeId> path;
        Vertex cur = u;
        int want = d;
        while (at_[cur][want] != -1) {
            EdgeId e = at_[cur][want];
            path.push_back(e);
            cur = g_.edge(e).other(cur);
            want = want == d ? c : d;
        }
        std::vector<int> swapped;
        for (EdgeId e : path) swapped.push_back(color_[e] == c ? d : c);
        for (EdgeId e : path) set(e, 0);
        for (std::size_t i = 0; i < path.size(); ++i) set(path[i], swapped[i]);
    }

    bool is_fan(Vertex u, const std::vector<Vertex>& fan, std::size_t len) const {
        for (std::size_t j = 0; j + 1 < len; ++j) {
            int c = color_[edge_between(u, fan[j + 1])];
            if (c == 0 || !is_free(fan[j], c)) return false;
        }
        return true;
    }

    void color_edge(EdgeId e) {
        Vertex u = g_.edge(e).u;
        Vertex v = g_.edge(e).v;
        std::vector<Vertex> fan{v};
        std::vector<bool> in_fan(g_.vertex_count(), false);
        in_fan[v] = true;
        for (bool grew = true; grew;) {
            grew = false;
            Vertex last = fan.back();
            auto nb = g_.neighbors(u);
            auto inc = g_.incident_edges(u);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                int c = color_[inc[i]];
                if (in_fan[nb[i]] || c == 0 || !is_free(last, c)) continue;
                fan.push_back(nb[i]);
                in_fan[nb[i]] = true;
                grew = true;
                break;
            }
        }
        int c = lowest_free(u);
        int d = lowest_free(fan.back());
        if (c != d) invert_path(u, c, d);
        std::size_t w = fan.size();
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (is_free(fan[i], d) && is_fan(u, fan, i + 1)) {
                w = i;
                break;
            }
        }
        if (w == fan.size()) throw std::logic_error("fan rotation failed");
        for (std::size_t j = 0; j < w; ++j) {
            EdgeId cur = edge_between(u, fan[j]);
            EdgeId next = edge_between(u, fan[j + 1]);
            int moved = color_[next];
            set(next, 0);
            set(cur, moved);
        }
        set(edge_between(u, fan[w]), d);
    }

    const Graph& g_;
    int colors_;
    std::vector<std::vector<EdgeId>> at_;
    std::vector<int> color_;
};

}  // namespace

EdgeColoring vizing_color(const Graph& g) {
    return FanColorer(g).run();
}

EdgeColoring rebalance(const EdgeColoring& c, const Graph& g) {
    EdgeColoring out = c;
    const int p = c.p();
    for (;;) {
        auto sizes = out.class_sizes();
        int big = 1;
        int small = 1;
        for (int col = 2; col <= p; ++col) {
            if (sizes[col] > sizes[big]) big = col;
            if (sizes[col] < sizes[small]) small = col;
        }
        if (sizes[big] - sizes[small] <= 1) return out;

        // Components of the big/small subgraph are paths and even cycles; some path
        // has one more big edge than small edges. Take the one with the lowest edge id.
        std::vector<bool> visited(g.edge_count(), false);
        bool swapped = false;
        for (EdgeId start = 0; start < g.edge_count() && !swapped; ++start) {
            if (visited[start] || (out.color(start) != big && out.color(start) != small)) continue;
            std::vector<EdgeId> comp;
            std::vector<EdgeId> stack{start};
            visited[start] = true;
            while (!stack.empty()) {
                EdgeId e = stack.back();
                stack.pop_back();
                comp.push_back(e);
                for (Vertex end : {g.edge(e).u, g.edge(e).v}) {
                    for (EdgeId f : g.incident_edges(end)) {
                        if (!visited[f] && (out.color(f) == big || out.color(f) == small)) {
                            visited[f] = true;
                            stack.push_back(f);
                        }
                    }
                }
            }
            int balance = 0;
            for (EdgeId e : comp) balance += out.color(e) == big ? 1 : -1;
            if (balance == 1) {
                for (EdgeId e : comp) out.assign(e, out.color(e) == big ? small : big);
                swapped = true;
            }
        }
        if (!swapped) throw std::logic_error("rebalance found no alternating path");
    }
}

}  // namespace mecs
