#include "mecs/modulator.hpp"

#include <algorithm>

#include "mecs/matching.hpp"

namespace mecs {

bool is_deg1_modulator(const Graph& g, const std::vector<Vertex>& x) {
    std::vector<bool> in_x(g.vertex_count(), false);
    for (Vertex v : x) in_x[v] = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in_x[v]) continue;
        int deg = 0;
        for (Vertex w : g.neighbors(v)) deg += in_x[w] ? 0 : 1;
        if (deg > 1) return false;
    }
    return true;
}

std::vector<Vertex> deg1_modulator_3approx(const Graph& g) {
    std::vector<bool> in_x(g.vertex_count(), false);
    std::vector<Vertex> x;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (in_x[u]) continue;
        std::vector<Vertex> open;
        for (Vertex w : g.neighbors(u)) {
            if (!in_x[w]) open.push_back(w);
            if (open.size() == 2) break;
        }
        if (open.size() < 2) continue;
        for (Vertex v : {u, open[0], open[1]}) {
            in_x[v] = true;
            x.push_back(v);
        }
    }
    std::sort(x.begin(), x.end());
    return x;
}

std::vector<Vertex> minimalize_modulator(const Graph& g, std::vector<Vertex> x) {
    std::sort(x.begin(), x.end());
    for (std::size_t i = x.size(); i-- > 0;) {
        std::vector<Vertex> trial = x;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_deg1_modulator(g, trial)) x = std::move(trial);
    }
    return x;
}

Precheck parameter_precheck(const MecsInstance& inst) {
    validate_instance(inst);
    const Graph& g = inst.graph;
    Precheck r;
    Matching m1 = max_matching(g);
    r.mm = static_cast<int>(m1.size());
    if (inst.l <= r.mm) {
        r.yes = true;
        r.witness = EdgeColoring(g.edge_count(), inst.p);
        for (EdgeId e : m1.edges) r.witness.assign(e, 1);
        return r;
    }
    std::vector<bool> in_m1(g.edge_count(), false);
    for (EdgeId e : m1.edges) in_m1[e] = true;
    std::vector<EdgeId> rest;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!in_m1[e]) rest.push_back(e);
    }
    Matching m2 = max_matching(g, rest);
    r.second_matching = static_cast<int>(m2.size());
    if (inst.p >= 2 && r.mm + r.second_matching >= inst.l) {
        r.yes = true;
        r.witness = EdgeColoring(g.edge_count(), inst.p);
        for (EdgeId e : m1.edges) r.witness.assign(e, 1);
        for (EdgeId e : m2.edges) r.witness.assign(e, 2);
        return r;
    }
    // vc <= 2 mm < 2 l; |V(M2)| = 2 |M2|.
    r.vc_bound_holds = inst.l > r.mm;
    r.modulator_bound_holds = 2 * r.second_matching < 2 * (inst.l - r.mm);
    return r;
}

}  // namespace mecs
