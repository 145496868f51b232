#include "mecs/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mecs/modulator.hpp"

namespace mecs {

const char* to_string(Rule r) { return r == Rule::RR1 ? "RR1" : "RR2"; }

MecsInstance vacuous_yes_instance() { return {Graph(2, {{0, 1}}), 1, 1}; }

MecsInstance vacuous_no_instance() { return {Graph(0, {}), 1, 1}; }

namespace {

// Components of g - X, ordered by their lowest vertex.
std::vector<std::vector<Vertex>> components_outside(const Graph& g, const std::vector<bool>& in_x) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (in_x[s] || seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (Vertex w : g.neighbors(comp[i])) {
                if (!in_x[w] && !seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<bool> membership(int n, const std::vector<Vertex>& x) {
    std::vector<bool> in(n, false);
    for (Vertex v : x) in[v] = true;
    return in;
}

int internal_edges(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<bool> in = membership(g.vertex_count(), vertices);
    int count = 0;
    for (Vertex v : vertices) {
        for (Vertex w : g.neighbors(v)) count += (in[w] && v < w) ? 1 : 0;
    }
    return count;
}

bool touches(const Graph& g, const std::vector<Vertex>& comp, const std::vector<bool>& in_x) {
    for (Vertex v : comp) {
        for (Vertex w : g.neighbors(v)) {
            if (in_x[w]) return true;
        }
    }
    return false;
}

void require_modulator(const Graph& g, const std::vector<Vertex>& x) {
    if (!is_deg1_modulator(g, x)) throw std::invalid_argument("X is not a deg-1-modulator");
}

RuleApplication apply_deletion(const MecsInstance& inst, const std::vector<Vertex>& x, std::vector<Vertex> deleted,
                               int requested_decrease, Rule rule) {
    std::sort(deleted.begin(), deleted.end());
    VertexDeletion del = delete_vertices(inst.graph, deleted);
    std::vector<Vertex> fresh(inst.graph.vertex_count(), -1);
    for (std::size_t i = 0; i < del.origin.size(); ++i) fresh[del.origin[i]] = static_cast<Vertex>(i);
    RuleApplication app;
    int decrease = std::min(inst.l, requested_decrease);
    app.instance = {std::move(del.graph), inst.l - decrease, inst.p};
    for (Vertex v : x) {
        if (fresh[v] >= 0) app.modulator.push_back(fresh[v]);
    }
    app.origin = std::move(del.origin);
    app.step = {rule, std::move(deleted), decrease};
    return app;
}

}  // namespace

std::optional<RuleApplication> rule1_drop_isolated_components(const MecsInstance& inst,
                                                              const std::vector<Vertex>& x) {
    const Graph& g = inst.graph;
    require_modulator(g, x);
    std::vector<bool> in_x = membership(g.vertex_count(), x);
    for (const auto& comp : components_outside(g, in_x)) {
        if (touches(g, comp, in_x)) continue;
        return apply_deletion(inst, x, comp, internal_edges(g, comp), Rule::RR1);
    }
    return std::nullopt;
}

std::optional<ExpansionResult> find_expansion(const BipartiteGraph& b, int t) {
    if (t < 1 || b.left == 0 || b.right < t * b.left) return std::nullopt;
    std::vector<bool> left_alive(b.left, true);
    std::vector<bool> right_alive(b.right, true);
    for (;;) {
        std::vector<int> owner(b.right, -1);
        std::vector<int> load(b.left, 0);
        std::vector<bool> visited(b.right);
        // Kuhn-style augmentation where each left vertex accepts t partners.
        auto augment = [&](auto&& self, int l) -> bool {
            for (int r : b.adj[l]) {
                if (!right_alive[r] || visited[r]) continue;
                visited[r] = true;
                if (owner[r] == -1 || self(self, owner[r])) {
                    owner[r] = l;
                    return true;
                }
            }
            return false;
        };
        for (int l = 0; l < b.left; ++l) {
            if (!left_alive[l]) continue;
            for (int copy = 0; copy < t; ++copy) {
                std::fill(visited.begin(), visited.end(), false);
                if (!augment(augment, l)) break;
            }
        }
        for (int r = 0; r < b.right; ++r) {
            if (owner[r] >= 0) ++load[owner[r]];
        }
        bool saturated = true;
        for (int l = 0; l < b.left; ++l) saturated = saturated && (!left_alive[l] || load[l] == t);
        if (saturated) {
            ExpansionResult res;
            for (int l = 0; l < b.left; ++l) {
                if (left_alive[l]) res.x_prime.push_back(l);
            }
            if (res.x_prime.empty()) return std::nullopt;
            for (int r = 0; r < b.right; ++r) {
                if (owner[r] >= 0) {
                    res.c_prime.push_back(r);
                    res.expansion_edges.emplace_back(owner[r], r);
                }
            }
            std::sort(res.expansion_edges.begin(), res.expansion_edges.end());
            return res;
        }
        // Left vertices reachable from unsaturated ones by alternating paths form a
        // Hall violator A with |N(A)| < t|A|; drop A and N(A).
        std::vector<bool> in_a(b.left, false);
        std::vector<bool> in_na(b.right, false);
        std::vector<int> queue;
        for (int l = 0; l < b.left; ++l) {
            if (left_alive[l] && load[l] < t) {
                in_a[l] = true;
                queue.push_back(l);
            }
        }
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (int r : b.adj[queue[i]]) {
                if (!right_alive[r] || in_na[r]) continue;
                in_na[r] = true;
                int next = owner[r];
                if (next >= 0 && !in_a[next]) {
                    in_a[next] = true;
                    queue.push_back(next);
                }
            }
        }
        for (int l = 0; l < b.left; ++l) {
            if (in_a[l]) left_alive[l] = false;
        }
        for (int r = 0; r < b.right; ++r) {
            if (in_na[r]) right_alive[r] = false;
        }
    }
}

std::optional<RuleApplication> rule2_expansion_delete(const MecsInstance& inst, const std::vector<Vertex>& x) {
    const Graph& g = inst.graph;
    require_modulator(g, x);
    if (x.empty()) return std::nullopt;
    std::vector<bool> in_x = membership(g.vertex_count(), x);
    auto comps = components_outside(g, in_x);
    std::vector<int> comp_of(g.vertex_count(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (!touches(g, comps[c], in_x)) throw std::invalid_argument("rule 2 requires rule 1 to be inapplicable");
        for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
    }
    if (static_cast<long long>(comps.size()) < static_cast<long long>(inst.p) * static_cast<long long>(x.size())) {
        return std::nullopt;
    }
    BipartiteGraph b;
    b.left = static_cast<int>(x.size());
    b.right = static_cast<int>(comps.size());
    b.adj.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (Vertex w : g.neighbors(x[i])) {
            if (comp_of[w] >= 0) b.adj[i].push_back(comp_of[w]);
        }
        std::sort(b.adj[i].begin(), b.adj[i].end());
        b.adj[i].erase(std::unique(b.adj[i].begin(), b.adj[i].end()), b.adj[i].end());
    }
    auto exp = find_expansion(b, inst.p);
    if (!exp) return std::nullopt;
    std::vector<Vertex> deleted;
    int c_edges = 0;
    for (int l : exp->x_prime) deleted.push_back(x[l]);
    for (int c : exp->c_prime) {
        deleted.insert(deleted.end(), comps[c].begin(), comps[c].end());
        c_edges += internal_edges(g, comps[c]);
    }
    int decrease = inst.p * static_cast<int>(exp->x_prime.size()) + c_edges;
    return apply_deletion(inst, x, std::move(deleted), decrease, Rule::RR2);
}

KernelTrace kernelize(const MecsInstance& inst) {
    validate_instance(inst);
    KernelTrace trace;
    trace.original = inst;
    Precheck pre = parameter_precheck(inst);
    if (pre.yes) {
        trace.early_yes = true;
        trace.final_instance = vacuous_yes_instance();
        return trace;
    }
    if (inst.p == 1) {
        // One color class is a matching and l > mm here.
        trace.early_no = true;
        trace.final_instance = vacuous_no_instance();
        return trace;
    }
    std::vector<Vertex> x = minimalize_modulator(inst.graph, deg1_modulator_3approx(inst.graph));
    trace.modulator = x;
    MecsInstance cur = inst;
    std::vector<Vertex> origin(inst.graph.vertex_count());
    std::iota(origin.begin(), origin.end(), 0);

    auto absorb = [&](RuleApplication&& app) {
        KernelStep step = std::move(app.step);
        for (Vertex& v : step.deleted) v = origin[v];
        std::sort(step.deleted.begin(), step.deleted.end());
        trace.steps.push_back(std::move(step));
        std::vector<Vertex> next(app.origin.size());
        for (std::size_t i = 0; i < app.origin.size(); ++i) next[i] = origin[app.origin[i]];
        origin = std::move(next);
        cur = std::move(app.instance);
        x = std::move(app.modulator);
    };

    for (;;) {
        while (auto app = rule1_drop_isolated_components(cur, x)) absorb(std::move(*app));
        auto app = rule2_expansion_delete(cur, x);
        if (!app) break;
        absorb(std::move(*app));
    }
    trace.final_instance = std::move(cur);
    trace.final_modulator = std::move(x);
    trace.origin = std::move(origin);
    return trace;
}

}  // namespace mecs
